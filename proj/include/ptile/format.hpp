#pragma once

#include <charconv>
#include <string>

namespace ptile {

/// Shortest decimal representation that parses back to the same double.
inline std::string format_real(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace ptile
