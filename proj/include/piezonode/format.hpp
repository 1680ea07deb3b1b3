#pragma once

#include <cstdio>
#include <string>

namespace piezonode {

/// Round-trippable decimal rendering (17 significant digits), used by every
/// text emitter so identical runs produce byte-identical files.
inline std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string fmt_sig(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

}  // namespace piezonode
