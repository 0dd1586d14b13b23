#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quasr {

using i128 = __int128;

// Counts are exact integers up to 2^63 - 1; operations report overflow
// instead of wrapping. Wide accumulation happens in i128.

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count overflow (128-bit)");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count overflow (128-bit)");
    return r;
}

inline std::int64_t narrow_count(i128 v) {
    if (v > i128(INT64_MAX) || v < -i128(INT64_MAX))
        throw std::overflow_error("count exceeds 2^63 - 1");
    return std::int64_t(v);
}

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

}  // namespace quasr
