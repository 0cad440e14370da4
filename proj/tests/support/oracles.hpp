#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the normal-form or homology code it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Int = std::int64_t;

/// Number of elements of each order in Z_{orders[0]} x Z_{orders[1]} x ...,
/// by enumerating every element. Finite abelian groups are isomorphic iff
/// these counts agree.
inline std::map<Int, Int> element_order_profile(const std::vector<Int>& orders) {
    std::map<Int, Int> profile;
    std::vector<Int> digit(orders.size(), 0);
    while (true) {
        Int order = 1;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            const Int o = orders[i] / std::gcd(orders[i], digit[i]);
            order = std::lcm(order, o);
        }
        ++profile[order];
        std::size_t k = 0;
        while (k < orders.size()) {
            if (++digit[k] < orders[k]) break;
            digit[k] = 0;
            ++k;
        }
        if (k == orders.size()) break;
    }
    return profile;
}

inline bool isomorphic_finite(const std::vector<Int>& a, const std::vector<Int>& b) {
    return element_order_profile(a) == element_order_profile(b);
}

/// Invariant factors by prime-power redistribution: split every order into
/// prime powers, then for each prime hand the largest power to the last
/// factor, the next largest to the one before, and so on.
inline std::vector<Int> invariant_factors_by_prime_powers(const std::vector<Int>& orders) {
    std::map<Int, std::vector<Int>> powers;  // prime -> prime powers
    for (Int n : orders) {
        for (Int p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            Int q = 1;
            while (n % p == 0) {
                n /= p;
                q *= p;
            }
            powers[p].push_back(q);
        }
        if (n > 1) powers[n].push_back(n);
    }
    std::size_t slots = 0;
    for (auto& [p, v] : powers) {
        std::sort(v.begin(), v.end(), std::greater<>());
        slots = std::max(slots, v.size());
    }
    std::vector<Int> factors(slots, 1);
    for (const auto& [p, v] : powers) {
        for (std::size_t i = 0; i < v.size(); ++i) factors[slots - 1 - i] *= v[i];
    }
    return factors;
}

/// Smallest a with a^2 = -1 mod q, or -1 when none exists.
inline Int sqrt_minus_one(Int q) {
    for (Int a = 0; a < q; ++a) {
        if ((a * a + 1) % q == 0) return a;
    }
    return -1;
}

inline bool is_prime_slow(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// A graded group given as per-degree (rank, torsion orders) lists.
struct Grading {
    struct Entry {
        Int rank = 0;
        std::vector<Int> torsion;
    };
    std::vector<Entry> degrees;
};

/// Kunneth formula expanded over every pair of cyclic summands.
inline Grading kunneth(const Grading& a, const Grading& b) {
    Grading out;
    out.degrees.resize(a.degrees.size() + b.degrees.size() - 1);
    for (std::size_t i = 0; i < a.degrees.size(); ++i) {
        for (std::size_t j = 0; j < b.degrees.size(); ++j) {
            const auto& x = a.degrees[i];
            const auto& y = b.degrees[j];
            auto& tensor = out.degrees[i + j];
            tensor.rank += x.rank * y.rank;
            for (Int r = 0; r < x.rank; ++r) tensor.torsion.insert(tensor.torsion.end(), y.torsion.begin(), y.torsion.end());
            for (Int r = 0; r < y.rank; ++r) tensor.torsion.insert(tensor.torsion.end(), x.torsion.begin(), x.torsion.end());
            for (Int m : x.torsion) {
                for (Int n : y.torsion) tensor.torsion.push_back(std::gcd(m, n));
            }
            if (i + j + 1 < out.degrees.size()) {
                auto& tor = out.degrees[i + j + 1];
                for (Int m : x.torsion) {
                    for (Int n : y.torsion) tor.torsion.push_back(std::gcd(m, n));
                }
            }
        }
    }
    return out;
}

}  // namespace oracle
