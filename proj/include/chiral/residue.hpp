#pragma once

// Primality and the "is -1 a square mod q" test behind the linking-form
// obstruction.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "chiral/detail/checked.hpp"

namespace chiral {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin; exact for all 64-bit inputs.
inline bool is_prime(Int n) {
    if (n < 2) return false;
    const auto u = static_cast<std::uint64_t>(n);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (u % p == 0) return u == p;
    }
    std::uint64_t d = u - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::pow_mod(a, d, u);
        if (x == 1 || x == u - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mul_mod(x, x, u);
            if (x == u - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Moduli up to this bound are decided by an exhaustive scan over [0, q).
inline constexpr Int kResidueScanLimit = Int{1} << 22;

/// Smallest a in [0, q) with a^2 = -1 (mod q), by exhaustive scan.
inline std::optional<Int> square_root_of_minus_one_by_scan(Int q) {
    if (q <= 0) throw std::invalid_argument("modulus must be >= 1, got " + std::to_string(q));
    const auto u = static_cast<std::uint64_t>(q);
    const std::uint64_t target = (u - 1) % u;
    for (std::uint64_t a = 0; a < u; ++a) {
        if (detail::mul_mod(a, a, u) == target) return static_cast<Int>(a);
    }
    return std::nullopt;
}

/// Euler's criterion for an odd prime p: -1 is a square iff (-1)^((p-1)/2) = 1 (mod p).
inline bool minus_one_is_square_by_euler(Int p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("Euler criterion needs an odd prime, got " + std::to_string(p));
    const auto u = static_cast<std::uint64_t>(p);
    return detail::pow_mod(u - 1, (u - 1) / 2, u) == 1;
}

/**
 * True iff a^2 = -1 (mod q) has a solution.
 *
 * Odd primes go through Euler's criterion. Other moduli up to
 * kResidueScanLimit are scanned exhaustively. Beyond that, q is factored by
 * trial division and the CRT/Hensel characterization is used: a solution
 * exists iff 4 does not divide q and every odd prime factor is 1 mod 4.
 */
inline bool minus_one_is_square_mod(Int q) {
    if (q <= 0) throw std::invalid_argument("modulus must be >= 1, got " + std::to_string(q));
    if (q == 1) return true;
    if (q % 2 == 1 && is_prime(q)) return minus_one_is_square_by_euler(q);
    if (q <= kResidueScanLimit) return square_root_of_minus_one_by_scan(q).has_value();

    Int rest = q;
    if (rest % 4 == 0) return false;
    if (rest % 2 == 0) rest /= 2;
    for (Int f = 3; f <= rest / f; f += 2) {
        if (rest % f != 0) continue;
        if (f % 4 == 3) return false;
        while (rest % f == 0) rest /= f;
    }
    return rest == 1 || rest % 4 == 1;
}

}  // namespace chiral
