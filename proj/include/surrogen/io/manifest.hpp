#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace surrogen::io {

// Provenance record written to every output directory: which command ran,
// on which input (path + content hash), with which knobs, by which tool
// version, and when. Serialized as sorted "key = value" lines.
struct RunManifest {
    std::string command;              // generate | report | msweep | baseline
    std::string source;               // input path as given on the command line
    std::uint64_t input_fnv1a64 = 0;  // FNV-1a 64 over the input file bytes
    std::optional<int> m;
    std::optional<std::string> repair;  // none | resample | clamp
    std::optional<std::uint64_t> seed;
    std::optional<int> count;
    std::string version;
    std::string created_utc;  // ISO-8601 Z; honours SOURCE_DATE_EPOCH
    std::vector<std::pair<std::string, std::string>> extra;  // command-specific
};

std::uint64_t fnv1a64(std::span<const std::byte> bytes) noexcept;
std::uint64_t fnv1a64_file(const std::filesystem::path& path);

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);
RunManifest read_manifest(const std::filesystem::path& path);

// "2026-01-31T12:00:00Z" for the current instant, or for SOURCE_DATE_EPOCH
// when that variable is set (reproducible-output convention).
std::string current_utc_timestamp();

}  // namespace surrogen::io
