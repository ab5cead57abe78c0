#pragma once

#include <cstdint>

#include "circind/errors.hpp"

namespace circind {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticError("exact integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticError("exact integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticError("exact integer overflow in multiplication");
    return r;
}

// Narrow a wide accumulator back to 64 bits; alternating binomial sums are
// accumulated in __int128 (cannot wrap for orders <= 64) and must fit i64.
inline std::int64_t checked_narrow(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw ArithmeticError("exact integer overflow narrowing a wide accumulator");
    return static_cast<std::int64_t>(v);
}

}  // namespace circind
