#pragma once

// Overflow-checked 64-bit arithmetic. Every group order and invariant factor
// in the library lives in [1, 2^63); anything that would leave that range
// throws std::overflow_error instead of wrapping.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chiral {

using Int = std::int64_t;

namespace detail {

inline Int checked_mul(Int a, Int b) {
    Int out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " * " +
                                  std::to_string(b) + " exceeds 64 bits");
    }
    return out;
}

inline Int checked_add(Int a, Int b) {
    Int out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " + " +
                                  std::to_string(b) + " exceeds 64 bits");
    }
    return out;
}

inline Int checked_lcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace detail
}  // namespace chiral
