#pragma once

/**
 * @file degree_set.hpp
 * @brief What is known about D(M), the set of degrees of self-maps of M.
 *
 * A DegreeSet pairs a finite set of realized degrees (always containing 0
 * and 1: constant map and identity) with an upper bound drawn from a small
 * lattice of subsets of Z. When `exact` is set, D(M) equals the bound.
 */

#include <numeric>
#include <set>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include "chiral/detail/checked.hpp"

namespace chiral {

enum class BoundKind {
    AllIntegers,      // Z
    SignedUnit,       // {-1, 0, 1}
    NonNegativeUnit,  // {0, 1}
    PerfectPowers,    // {k^n : k in Z}
    Unknown,          // no bound known
};

struct DegreeBound {
    BoundKind kind = BoundKind::Unknown;
    Int exponent = 0;  // only for PerfectPowers, always >= 2

    static DegreeBound all_integers() { return {BoundKind::AllIntegers, 0}; }
    static DegreeBound signed_unit() { return {BoundKind::SignedUnit, 0}; }
    static DegreeBound non_negative_unit() { return {BoundKind::NonNegativeUnit, 0}; }
    static DegreeBound unknown() { return {BoundKind::Unknown, 0}; }
    static DegreeBound perfect_powers(Int n) {
        if (n < 1) throw std::invalid_argument("perfect_powers: exponent must be >= 1");
        if (n == 1) return all_integers();
        return {BoundKind::PerfectPowers, n};
    }

    bool unbounded() const { return kind == BoundKind::AllIntegers || kind == BoundKind::Unknown; }

    friend bool operator==(const DegreeBound&, const DegreeBound&) = default;
};

namespace detail {

/// |d| is a perfect n-th power of a nonnegative integer.
inline bool is_perfect_power(Int d, Int n) {
    if (d < 0) d = -d;
    if (d <= 1) return true;
    for (Int k = 2;; ++k) {
        Int v = 1;
        for (Int i = 0; i < n; ++i) {
            if (v > d / k) return false;
            v *= k;
        }
        if (v == d) return true;
    }
}

}  // namespace detail

inline bool contains(const DegreeBound& b, Int d) {
    switch (b.kind) {
        case BoundKind::AllIntegers:
        case BoundKind::Unknown: return true;
        case BoundKind::SignedUnit: return d >= -1 && d <= 1;
        case BoundKind::NonNegativeUnit: return d == 0 || d == 1;
        case BoundKind::PerfectPowers:
            if (d < 0 && b.exponent % 2 == 0) return false;
            return detail::is_perfect_power(d, b.exponent);
    }
    return false;
}

/// Intersection of two bounds; exact within the lattice.
inline DegreeBound intersect(const DegreeBound& a, const DegreeBound& b) {
    if (a.kind == BoundKind::Unknown) return b;
    if (b.kind == BoundKind::Unknown) return a;
    if (a.kind == BoundKind::AllIntegers) return b;
    if (b.kind == BoundKind::AllIntegers) return a;
    if (a.kind == BoundKind::NonNegativeUnit || b.kind == BoundKind::NonNegativeUnit) {
        return DegreeBound::non_negative_unit();
    }
    if (a.kind == BoundKind::SignedUnit && b.kind == BoundKind::SignedUnit) return a;
    if (a.kind == BoundKind::PerfectPowers && b.kind == BoundKind::PerfectPowers) {
        return DegreeBound::perfect_powers(detail::checked_lcm(a.exponent, b.exponent));
    }
    // SignedUnit with PerfectPowers(n): {0, 1, (-1)^n}.
    const Int n = a.kind == BoundKind::PerfectPowers ? a.exponent : b.exponent;
    return n % 2 == 1 ? DegreeBound::signed_unit() : DegreeBound::non_negative_unit();
}

/// a is contained in b.
inline bool is_subset(const DegreeBound& a, const DegreeBound& b) {
    if (b.unbounded()) return true;
    if (a.unbounded()) return false;
    return intersect(a, b) == a;
}

/// A few members of the bound, used as witnesses when the bound is exact.
inline std::set<Int> witnesses(const DegreeBound& b) {
    switch (b.kind) {
        case BoundKind::AllIntegers: return {-1, 0, 1, 2};
        case BoundKind::SignedUnit: return {-1, 0, 1};
        case BoundKind::NonNegativeUnit:
        case BoundKind::Unknown: return {0, 1};
        case BoundKind::PerfectPowers: {
            std::set<Int> w{0, 1};
            if (b.exponent % 2 == 1) w.insert(-1);
            if (b.exponent < 62) w.insert(Int{1} << b.exponent);
            return w;
        }
    }
    return {0, 1};
}

inline std::string to_string(const DegreeBound& b) {
    switch (b.kind) {
        case BoundKind::AllIntegers: return "Z (all integers)";
        case BoundKind::SignedUnit: return "{-1, 0, 1}";
        case BoundKind::NonNegativeUnit: return "{0, 1}";
        case BoundKind::PerfectPowers: return "{k^" + std::to_string(b.exponent) + " | k in Z}";
        case BoundKind::Unknown: return "unknown";
    }
    return "?";
}

inline const char* bound_name(BoundKind k) {
    switch (k) {
        case BoundKind::AllIntegers: return "AllIntegers";
        case BoundKind::SignedUnit: return "SignedUnit";
        case BoundKind::NonNegativeUnit: return "NonNegativeUnit";
        case BoundKind::PerfectPowers: return "PerfectPowers";
        case BoundKind::Unknown: return "Unknown";
    }
    return "?";
}

struct DegreeSet {
    std::set<Int> known{0, 1};
    DegreeBound upper = DegreeBound::unknown();
    bool exact = false;
    bool conflict = false;           // two rules disagreed
    std::vector<std::string> rules;  // rule trace, in firing order

    static DegreeSet exactly(const DegreeBound& b) {
        DegreeSet s;
        s.upper = b;
        s.exact = true;
        s.known = witnesses(b);
        return s;
    }

    bool contains_minus_one() const { return known.contains(-1); }
    bool excludes_minus_one() const { return !upper.unbounded() && !contains(upper, -1); }
};

inline std::string to_string(const DegreeSet& s) {
    if (s.exact) return to_string(s.upper);
    std::ostringstream os;
    os << "contains {";
    bool first = true;
    for (Int d : s.known) {
        os << (first ? "" : ", ") << d;
        first = false;
    }
    os << "}; ";
    if (s.upper.kind == BoundKind::Unknown) {
        os << "upper bound unknown";
    } else {
        os << "contained in " << to_string(s.upper);
    }
    return os.str();
}

}  // namespace chiral
