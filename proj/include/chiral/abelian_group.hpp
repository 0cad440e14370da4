#pragma once

/**
 * @file abelian_group.hpp
 * @brief Finitely generated abelian groups in invariant-factor normal form.
 *
 * A group is stored as Z^rank + Z_{d_1} + ... + Z_{d_k} with every d_i >= 2
 * and d_i | d_{i+1}. Every constructor normalizes, so two values compare
 * equal exactly when the groups are isomorphic.
 *
 * Factor magnitudes are bounded by 2^63 - 1. Operations whose result would
 * need a larger invariant factor (or a larger order) throw
 * std::overflow_error rather than wrapping.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiral/detail/checked.hpp"

namespace chiral {

class AbGroup {
public:
    /// The trivial group.
    AbGroup() = default;

    /**
     * Normal form of Z^rank + (sum of Z_n for n in cyclic_orders).
     *
     * Orders equal to 1 contribute nothing. The divisibility chain is built
     * by repeated (a, b) -> (gcd, lcm) exchanges, which is the Smith form of
     * a diagonal matrix and needs no factorization.
     */
    static AbGroup normalize(std::span<const Int> cyclic_orders, Int rank = 0) {
        if (rank < 0) throw std::invalid_argument("AbGroup: negative free rank");
        std::vector<Int> f;
        f.reserve(cyclic_orders.size());
        for (Int n : cyclic_orders) {
            if (n <= 0) {
                throw std::invalid_argument("AbGroup: cyclic order must be >= 1, got " +
                                            std::to_string(n));
            }
            if (n > 1) f.push_back(n);
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                const Int g = std::gcd(f[i], f[j]);
                const Int l = detail::checked_mul(f[i] / g, f[j]);
                f[i] = g;
                f[j] = l;
            }
        }
        std::erase(f, Int{1});
        AbGroup out;
        out.rank_ = rank;
        out.factors_ = std::move(f);
        return out;
    }

    static AbGroup normalize(std::initializer_list<Int> cyclic_orders, Int rank = 0) {
        return normalize(std::span<const Int>(cyclic_orders.begin(), cyclic_orders.size()), rank);
    }

    static AbGroup trivial() { return {}; }
    static AbGroup free(Int rank) { return normalize(std::span<const Int>{}, rank); }
    static AbGroup integers() { return free(1); }
    static AbGroup cyclic(Int n) { return normalize({n}); }

    /// n copies of Z_order.
    static AbGroup cyclic_power(Int order, std::size_t copies) {
        std::vector<Int> v(copies, order);
        return normalize(v);
    }

    Int rank() const noexcept { return rank_; }
    const std::vector<Int>& invariant_factors() const noexcept { return factors_; }

    bool is_trivial() const noexcept { return rank_ == 0 && factors_.empty(); }
    bool is_finite() const noexcept { return rank_ == 0; }
    bool is_free() const noexcept { return factors_.empty(); }

    AbGroup torsion() const {
        AbGroup t;
        t.factors_ = factors_;
        return t;
    }

    AbGroup free_part() const { return free(rank_); }

    /// Order of the torsion subgroup (1 for torsion-free groups).
    Int torsion_order() const {
        Int n = 1;
        for (Int f : factors_) n = detail::checked_mul(n, f);
        return n;
    }

    /// Order of a finite group; throws for groups with a free part.
    Int order() const {
        if (rank_ != 0) throw std::domain_error("AbGroup::order: group is infinite");
        return torsion_order();
    }

    friend bool operator==(const AbGroup&, const AbGroup&) = default;
    friend auto operator<=>(const AbGroup&, const AbGroup&) = default;

private:
    Int rank_ = 0;
    std::vector<Int> factors_;
};

inline AbGroup direct_sum(const AbGroup& a, const AbGroup& b) {
    std::vector<Int> orders = a.invariant_factors();
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return AbGroup::normalize(orders, detail::checked_add(a.rank(), b.rank()));
}

/// a^n as a direct sum of n copies.
inline AbGroup power(const AbGroup& a, Int n) {
    if (n < 0) throw std::invalid_argument("power: negative exponent");
    std::vector<Int> orders;
    for (Int i = 0; i < n; ++i) {
        orders.insert(orders.end(), a.invariant_factors().begin(), a.invariant_factors().end());
    }
    return AbGroup::normalize(orders, detail::checked_mul(a.rank(), n));
}

// Both products are bilinear over the cyclic decomposition:
//   Z (x) G = G,  Z_m (x) Z_n = Z_gcd(m,n),
//   Tor(Z, G) = 0, Tor(Z_m, Z_n) = Z_gcd(m,n).

inline AbGroup tensor(const AbGroup& a, const AbGroup& b) {
    std::vector<Int> orders;
    for (Int i = 0; i < a.rank(); ++i) {
        orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    }
    for (Int i = 0; i < b.rank(); ++i) {
        orders.insert(orders.end(), a.invariant_factors().begin(), a.invariant_factors().end());
    }
    for (Int m : a.invariant_factors()) {
        for (Int n : b.invariant_factors()) orders.push_back(std::gcd(m, n));
    }
    return AbGroup::normalize(orders, detail::checked_mul(a.rank(), b.rank()));
}

inline AbGroup tor_product(const AbGroup& a, const AbGroup& b) {
    std::vector<Int> orders;
    for (Int m : a.invariant_factors()) {
        for (Int n : b.invariant_factors()) orders.push_back(std::gcd(m, n));
    }
    return AbGroup::normalize(orders);
}

/// q when g is Z_q for some q >= 2; empty otherwise (including for 0 and Z).
inline std::optional<Int> cyclic_order(const AbGroup& g) {
    if (g.rank() == 0 && g.invariant_factors().size() == 1) return g.invariant_factors().front();
    return std::nullopt;
}

/// "Z^2 + Z_2 + Z_12", with repeated torsion written "Z_14^2". Trivial is "0".
inline std::string to_string(const AbGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (g.rank() > 0) {
        sep();
        os << 'Z';
        if (g.rank() > 1) os << '^' << g.rank();
    }
    const auto& f = g.invariant_factors();
    for (std::size_t i = 0; i < f.size();) {
        std::size_t j = i;
        while (j < f.size() && f[j] == f[i]) ++j;
        sep();
        os << "Z_" << f[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const AbGroup& g) { return os << to_string(g); }

}  // namespace chiral
