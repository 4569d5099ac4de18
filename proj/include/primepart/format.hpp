#ifndef PRIMEPART_FORMAT_HPP
#define PRIMEPART_FORMAT_HPP

#include <cstdio>
#include <string>

namespace primepart {

/// 17 significant digits: round-trips any double, byte-stable across runs.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace primepart

#endif
