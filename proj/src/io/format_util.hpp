#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace surrogen::io {

// Shortest decimal form that parses back to the identical double, so file
// round-trips are bit-exact and diffs between runs are meaningful.
inline std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

}  // namespace surrogen::io
