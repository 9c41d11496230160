#pragma once

#include <cstdio>
#include <string>

namespace crowdex {

// Fixed-decimal formatting for every artifact this library writes. snprintf
// with an explicit precision is locale-independent and rounds half-to-even
// the same way everywhere, which keeps repeated runs byte-identical.
inline std::string formatFixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return std::string(buf);
}

} // namespace crowdex
