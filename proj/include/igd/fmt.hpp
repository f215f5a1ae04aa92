#pragma once

#include <charconv>
#include <string>

namespace igd {

// Shortest round-trip decimal form; locale-independent, so repeated runs
// emit byte-identical files.
inline std::string fmt_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace igd
