#include "surrogen/io/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "io/format_util.hpp"
#include "surrogen/error.hpp"

namespace surrogen::io {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(const std::string& cell) {
    const std::string t = trim(cell);
    if (t.empty()) return std::nullopt;
    double value = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) return std::nullopt;
    return value;
}

std::optional<std::size_t> parse_index(const std::string& s) {
    const std::string t = trim(s);
    if (t.empty()) return std::nullopt;
    std::size_t value = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) return std::nullopt;
    return value;
}

// All lines of the file, minus a UTF-8 BOM, CR line ends, and trailing
// blank lines.
std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::FileNotFound, "cannot open " + path.string());
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    if (!lines.empty() && lines.front().rfind("\xEF\xBB\xBF", 0) == 0) {
        lines.front().erase(0, 3);
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    return lines;
}

// A row is a header iff some cell is neither numeric nor blank.
bool looks_like_header(const std::vector<std::string>& fields) {
    return std::any_of(fields.begin(), fields.end(), [](const std::string& f) {
        return !trim(f).empty() && !parse_double(f).has_value();
    });
}

}  // namespace

TimeSeries read_series_csv(const std::filesystem::path& path,
                           const std::string& column, MissingPolicy policy) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) {
        throw Error(ErrorCode::ParseError, path.string() + " is empty");
    }

    const std::vector<std::string> first_row = split_fields(lines.front());
    const bool has_header = looks_like_header(first_row);

    // Header names win; otherwise the column must be a 0-based index.
    std::size_t col = 0;
    bool resolved = false;
    if (has_header) {
        for (std::size_t i = 0; i < first_row.size(); ++i) {
            if (trim(first_row[i]) == trim(column)) {
                col = i;
                resolved = true;
                break;
            }
        }
    }
    if (!resolved) {
        const auto index = parse_index(column);
        if (!index || (has_header && *index >= first_row.size())) {
            throw Error(ErrorCode::ColumnNotFound,
                        "no column '" + column + "' in " + path.string());
        }
        col = *index;
        resolved = true;
    }

    const std::size_t first_data = has_header ? 1 : 0;
    std::vector<std::optional<double>> cells;
    cells.reserve(lines.size() - first_data);
    for (std::size_t li = first_data; li < lines.size(); ++li) {
        const std::size_t row = li - first_data;
        const std::vector<std::string> fields = split_fields(lines[li]);
        if (col >= fields.size()) {
            throw Error(ErrorCode::ParseError,
                        "row " + std::to_string(row) + " has " +
                            std::to_string(fields.size()) +
                            " fields, column " + std::to_string(col) +
                            " requested",
                        row);
        }
        const std::string cell = trim(fields[col]);
        if (cell.empty()) {
            if (policy == MissingPolicy::Error) {
                throw Error(ErrorCode::MissingData,
                            "missing value at row " + std::to_string(row), row);
            }
            cells.push_back(std::nullopt);
            continue;
        }
        const auto value = parse_double(cell);
        if (!value) {
            throw Error(ErrorCode::ParseError,
                        "cannot parse '" + cell + "' at row " + std::to_string(row),
                        row);
        }
        cells.push_back(value);
    }

    if (std::none_of(cells.begin(), cells.end(),
                     [](const auto& c) { return c.has_value(); })) {
        throw Error(ErrorCode::AllMissing,
                    "column " + std::to_string(col) + " has no values");
    }

    // Fill gaps: linear between the nearest present neighbours, nearest
    // value at the boundaries.
    std::vector<double> values(cells.size());
    std::size_t i = 0;
    while (i < cells.size()) {
        if (cells[i]) {
            values[i] = *cells[i];
            ++i;
            continue;
        }
        std::size_t gap_end = i;
        while (gap_end < cells.size() && !cells[gap_end]) ++gap_end;
        const bool has_left = i > 0;
        const bool has_right = gap_end < cells.size();
        for (std::size_t k = i; k < gap_end; ++k) {
            if (has_left && has_right) {
                const double left = values[i - 1];
                const double right = *cells[gap_end];
                const double t = static_cast<double>(k - (i - 1)) /
                                 static_cast<double>(gap_end - (i - 1));
                values[k] = left + t * (right - left);
            } else if (has_left) {
                values[k] = values[i - 1];
            } else {
                values[k] = *cells[gap_end];
            }
        }
        i = gap_end;
    }

    return TimeSeries(std::move(values));
}

void write_surrogates_csv(const std::filesystem::path& path,
                          const SurrogateBatch& batch, BatchFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::FileNotFound, "cannot write " + path.string());
    }
    const std::size_t count = batch.surrogates.size();

    if (format == BatchFormat::Wide) {
        for (std::size_t i = 0; i < count; ++i) {
            if (i) out << ',';
            char name[32];
            std::snprintf(name, sizeof(name), "s%04zu", i);
            out << name;
        }
        out << '\n';
        const std::size_t n = count ? batch.surrogates.front().size() : 0;
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < count; ++i) {
                if (i) out << ',';
                out << format_double(batch.surrogates[i][k]);
            }
            out << '\n';
        }
    } else {
        out << "sample_id,index,value\n";
        for (std::size_t i = 0; i < count; ++i) {
            const TimeSeries& s = batch.surrogates[i];
            for (std::size_t k = 0; k < s.size(); ++k) {
                out << i << ',' << k << ',' << format_double(s[k]) << '\n';
            }
        }
    }
    if (!out) {
        throw Error(ErrorCode::ParseError, "write failed for " + path.string());
    }
}

std::vector<std::vector<double>> read_surrogates_csv(const std::filesystem::path& path) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) {
        throw Error(ErrorCode::ParseError, path.string() + " is empty");
    }

    std::vector<std::vector<double>> result;
    if (trim(lines.front()) == "sample_id,index,value") {
        for (std::size_t li = 1; li < lines.size(); ++li) {
            const std::size_t row = li - 1;
            const auto fields = split_fields(lines[li]);
            if (fields.size() != 3) {
                throw Error(ErrorCode::ParseError,
                            "bad long-format row " + std::to_string(row), row);
            }
            const auto sid = parse_index(fields[0]);
            const auto idx = parse_index(fields[1]);
            const auto val = parse_double(fields[2]);
            if (!sid || !idx || !val) {
                throw Error(ErrorCode::ParseError,
                            "bad long-format row " + std::to_string(row), row);
            }
            const std::size_t s = *sid, k = *idx;
            if (s >= result.size()) result.resize(s + 1);
            if (k >= result[s].size())
                result[s].resize(k + 1, std::numeric_limits<double>::quiet_NaN());
            result[s][k] = *val;
        }
        for (std::size_t i = 0; i < result.size(); ++i) {
            for (double v : result[i]) {
                if (std::isnan(v)) {
                    throw Error(ErrorCode::MissingData,
                                "surrogate " + std::to_string(i) +
                                    " has missing indices");
                }
            }
        }
    } else {
        const auto header = split_fields(lines.front());
        for (const std::string& h : header) {
            const std::string t = trim(h);
            if (t.size() < 2 || t[0] != 's' || !parse_index(t.substr(1))) {
                throw Error(ErrorCode::ParseError,
                            "unrecognized surrogate header cell '" + t + "'");
            }
        }
        result.resize(header.size());
        for (std::size_t li = 1; li < lines.size(); ++li) {
            const std::size_t row = li - 1;
            const auto fields = split_fields(lines[li]);
            if (fields.size() != header.size()) {
                throw Error(ErrorCode::ParseError,
                            "row " + std::to_string(row) + " has " +
                                std::to_string(fields.size()) + " fields, want " +
                                std::to_string(header.size()),
                            row);
            }
            for (std::size_t i = 0; i < fields.size(); ++i) {
                const auto value = parse_double(fields[i]);
                if (!value) {
                    throw Error(ErrorCode::ParseError,
                                "cannot parse '" + trim(fields[i]) + "' at row " +
                                    std::to_string(row),
                                row);
                }
                result[i].push_back(*value);
            }
        }
    }
    return result;
}

}  // namespace surrogen::io
