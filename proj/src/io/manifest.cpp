#include "surrogen/io/manifest.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "surrogen/error.hpp"

namespace surrogen::io {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x00000100000001b3ull;

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(v));
    return buf;
}

template <typename T>
T parse_or_throw(const std::string& text, const std::string& key) {
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw Error(ErrorCode::ParseError,
                    "manifest value for '" + key + "' is not numeric: " + text);
    }
    return value;
}

}  // namespace

std::uint64_t fnv1a64(std::span<const std::byte> bytes) noexcept {
    std::uint64_t h = kFnvOffset;
    for (std::byte b : bytes) {
        h ^= static_cast<std::uint64_t>(b);
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::FileNotFound, "cannot open " + path.string());
    }
    std::uint64_t h = kFnvOffset;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= kFnvPrime;
        }
    }
    return h;
}

std::string current_utc_timestamp() {
    std::time_t now = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    }
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
    std::vector<std::pair<std::string, std::string>> entries;
    entries.emplace_back("command", manifest.command);
    entries.emplace_back("source", manifest.source);
    entries.emplace_back("input_fnv1a64", to_hex(manifest.input_fnv1a64));
    if (manifest.m) entries.emplace_back("m", std::to_string(*manifest.m));
    if (manifest.repair) entries.emplace_back("repair", *manifest.repair);
    if (manifest.seed) entries.emplace_back("seed", std::to_string(*manifest.seed));
    if (manifest.count) entries.emplace_back("count", std::to_string(*manifest.count));
    entries.emplace_back("version", manifest.version);
    entries.emplace_back("created_utc", manifest.created_utc);
    entries.insert(entries.end(), manifest.extra.begin(), manifest.extra.end());
    std::sort(entries.begin(), entries.end());

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::FileNotFound, "cannot write " + path.string());
    }
    for (const auto& [key, value] : entries) {
        out << key << " = " << value << '\n';
    }
}

RunManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::FileNotFound, "cannot open " + path.string());
    }
    RunManifest m;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto sep = line.find(" = ");
        if (sep == std::string::npos) {
            throw Error(ErrorCode::ParseError, "bad manifest line: " + line);
        }
        const std::string key = line.substr(0, sep);
        const std::string value = line.substr(sep + 3);
        if (key == "command") {
            m.command = value;
        } else if (key == "source") {
            m.source = value;
        } else if (key == "input_fnv1a64") {
            std::uint64_t h = 0;
            const auto res =
                std::from_chars(value.data(), value.data() + value.size(), h, 16);
            if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
                throw Error(ErrorCode::ParseError, "bad manifest hash: " + value);
            }
            m.input_fnv1a64 = h;
        } else if (key == "m") {
            m.m = parse_or_throw<int>(value, key);
        } else if (key == "repair") {
            m.repair = value;
        } else if (key == "seed") {
            m.seed = parse_or_throw<std::uint64_t>(value, key);
        } else if (key == "count") {
            m.count = parse_or_throw<int>(value, key);
        } else if (key == "version") {
            m.version = value;
        } else if (key == "created_utc") {
            m.created_utc = value;
        } else {
            m.extra.emplace_back(key, value);
        }
    }
    return m;
}

}  // namespace surrogen::io
