#pragma once

#include <cstdint>
#include <string>

namespace squiral {

// Exact 128-bit arithmetic for the sequence values. The simplified recursion
// subtracts before it adds, so the signed type is mandatory.
using int128 = __int128;
using uint128 = unsigned __int128;

static_assert(sizeof(int128) == 16, "128-bit integers required");

inline std::string to_string(int128 v) {
    if (v == 0) {
        return "0";
    }
    const bool neg = v < 0;
    uint128 u = neg ? -static_cast<uint128>(v) : static_cast<uint128>(v);
    char buf[48];
    char* p = buf + sizeof(buf);
    while (u != 0) {
        *--p = static_cast<char>('0' + static_cast<unsigned>(u % 10));
        u /= 10;
    }
    if (neg) {
        *--p = '-';
    }
    return std::string(p, buf + sizeof(buf));
}

inline bool fits_int64(int128 v) {
    return v >= INT64_MIN && v <= INT64_MAX;
}

} // namespace squiral
