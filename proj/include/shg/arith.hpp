#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "shg/errors.hpp"

namespace shg {

// All counting is exact unsigned arithmetic capped at 128 bits.
// Overflow is detected and reported, never wrapped.
using u128 = unsigned __int128;

inline constexpr u128 u128_max = ~u128{0};

inline u128 checked_add(u128 a, u128 b) {
    if (b > u128_max - a) throw arithmetic_error("exact addition exceeds 128 bits");
    return a + b;
}

inline u128 checked_sub(u128 a, u128 b) {
    if (b > a) throw arithmetic_error("exact subtraction underflows");
    return a - b;
}

inline u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > u128_max / a) throw arithmetic_error("exact multiplication exceeds 128 bits");
    return a * b;
}

inline std::string to_decimal(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

inline bool fits_u64(u128 v) { return v <= u128{UINT64_MAX}; }

inline std::uint64_t to_u64(u128 v) {
    if (!fits_u64(v)) throw arithmetic_error("value " + to_decimal(v) + " exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

// Exact binomial coefficient C(n, k); k > n yields 0.
// Running product: after step i the value is C(n-k+i, i), so the division is
// exact and every intermediate is itself bounded by a binomial coefficient
// times (n-k+i). Any step beyond 128 bits throws.
inline u128 binom(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) throw validation_error("binom requires nonnegative arguments");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u128 result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result = checked_mul(result, static_cast<u128>(n - k + i));
        result /= static_cast<u128>(i);
    }
    return result;
}

}  // namespace shg
