#pragma once

#include <charconv>
#include <string>

namespace udtune {

// Shortest decimal form that round-trips the exact double.  All CSV output
// goes through this so repeated runs are byte-identical.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace udtune
