#pragma once

/**
 * @file analysis.hpp
 * @brief Strong-chirality certification and self-map degree sets.
 *
 * The chirality test is the linking-form obstruction: on a closed oriented
 * (2k+1)-manifold with k odd, a self-map f multiplies the symmetric linking
 * form on Tor H^{k+1} by deg f. If Tor H^{k+1} = Z_q, a map of degree -1
 * sends a generator x to a*x with -L(x,x) = a^2 L(x,x), forcing
 * a^2 = -1 (mod q). No such a means no map of degree -1.
 *
 * Degree sets come from a fixed catalogue of rules matched against the
 * construction expression (after rewriting spins of known forms) and the
 * descriptor's axiomatized facts.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiral/constructions.hpp"
#include "chiral/degree_set.hpp"
#include "chiral/manifold.hpp"
#include "chiral/residue.hpp"

namespace chiral {

/// Raised when the evidence for a descriptor is self-contradictory, e.g. a
/// user-asserted chirality fact on a manifold known to admit degree -1.
class ContradictionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// -----------------------------------------------------------------------------
// Linking-form obstruction
// -----------------------------------------------------------------------------

struct LinkingFormCheck {
    bool applies = false;     // dim = 4m+3 and Tor H^{k+1} is cyclic of order q >= 2
    bool proves = false;      // ... and -1 is not a square mod q
    std::optional<Int> order;
    std::string detail;
};

inline LinkingFormCheck linking_form_check(const ManifoldDescriptor& m) {
    LinkingFormCheck out;
    if (m.dim % 4 != 3) {
        out.detail = "dimension " + std::to_string(m.dim) + " is not 3 mod 4";
        return out;
    }
    const int k = (m.dim - 1) / 2;
    const AbGroup tor = m.cohomology().at(k + 1).torsion();
    const std::string where = "Tor H^" + std::to_string(k + 1) + " = " + to_string(tor);
    if (tor.is_trivial()) {
        out.detail = where + " is trivial";
        return out;
    }
    out.order = cyclic_order(tor);
    if (!out.order) {
        out.detail = where + " is not cyclic";
        return out;
    }
    out.applies = true;
    const Int q = *out.order;
    if (minus_one_is_square_mod(q)) {
        out.detail = where + ", and -1 is a square mod " + std::to_string(q);
        if (q <= kResidueScanLimit) {
            if (auto a = square_root_of_minus_one_by_scan(q)) {
                out.detail += " (" + std::to_string(*a) + "^2 = -1)";
            }
        }
        return out;
    }
    out.proves = true;
    out.detail = "dimension " + std::to_string(m.dim) + " = 2k+1 with k = " + std::to_string(k) + " odd; " +
                 where + "; -1 is not a square mod " + std::to_string(q);
    return out;
}

namespace detail {

/// Strong chirality from homology or a recorded fact; never consults degree sets.
inline std::optional<std::string> direct_chirality_certificate(const ManifoldDescriptor& m) {
    if (auto lf = linking_form_check(m); lf.proves) return "linking-form obstruction: " + lf.detail;
    if (const AxiomFact* f = m.find_fact(FactKind::ExternallyProvenStronglyChiral)) {
        return "recorded fact: strongly chiral (" + f->citation + ")";
    }
    return std::nullopt;
}

}  // namespace detail

// -----------------------------------------------------------------------------
// Spin rewriting
// -----------------------------------------------------------------------------

namespace detail {

inline Expr csum_chain(const Expr& piece, Int copies) {
    Expr out = piece;
    for (Int i = 1; i < copies; ++i) out = Expr::csum(out, piece);
    return out;
}

inline Expr rewrite_spins(const Expr& e);

inline Expr rewrite_spin_of(Int r, const Expr& c) {
    switch (c.kind()) {
        case ExprKind::Sphere: return Expr::sphere(c.arg(0) + r);
        case ExprKind::Surface:
            return csum_chain(Expr::prod(Expr::sphere(r + 1), Expr::sphere(1)), 2 * c.arg(0));
        case ExprKind::CP:
            if (c.arg(0) >= 2) return rewrite_spins(Expr::prod(Expr::cp(c.arg(0) - 1), Expr::sphere(r + 2)));
            break;
        case ExprKind::Prod:
            if (c.child(0).kind() == ExprKind::Sphere && c.child(1).kind() == ExprKind::Sphere) {
                const Int a = c.child(0).arg(0);
                const Int b = c.child(1).arg(0);
                return Expr::csum(Expr::prod(Expr::sphere(a + r), Expr::sphere(b)),
                                  Expr::prod(Expr::sphere(a), Expr::sphere(b + r)));
            }
            break;
        case ExprKind::CSum:
            return Expr::csum(rewrite_spin_of(r, c.child(0)), rewrite_spin_of(r, c.child(1)));
        default: break;
    }
    return Expr::spin(r, c);
}

}  // namespace detail

/**
 * Rewrites spins of known forms, innermost first:
 *
 *     sigma_r(S^n)       -> S^{n+r}
 *     sigma_r(S^a x S^b) -> (S^{a+r} x S^b) # (S^a x S^{b+r})
 *     sigma_r(Sigma_g)   -> #_{2g} (S^{r+1} x S^1)
 *     sigma_r(CP^n)      -> CP^{n-1} x S^{r+2}
 *     sigma_r(A # B)     -> sigma_r(A) # sigma_r(B)
 *
 * CP^1 is rewritten to S^2 everywhere.
 */
inline Expr detail::rewrite_spins(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::CP:
            if (e.arg(0) == 1) return Expr::sphere(2);
            return e;
        case ExprKind::Spin: return rewrite_spin_of(e.arg(0), rewrite_spins(e.child(0)));
        case ExprKind::CSum: return Expr::csum(rewrite_spins(e.child(0)), rewrite_spins(e.child(1)));
        case ExprKind::Prod: return Expr::prod(rewrite_spins(e.child(0)), rewrite_spins(e.child(1)));
        default: return e;
    }
}

inline Expr rewrite_spins(const Expr& e) { return detail::rewrite_spins(e); }

namespace detail {

inline bool is_sphere_product(const Expr& e) {
    if (e.kind() == ExprKind::Sphere) return true;
    if (e.kind() != ExprKind::Prod) return false;
    return is_sphere_product(e.child(0)) && is_sphere_product(e.child(1));
}

/// Spheres, products of spheres, and connected sums of those.
inline bool is_sphere_product_sum(const Expr& e) {
    if (e.kind() == ExprKind::CSum) return is_sphere_product_sum(e.child(0)) && is_sphere_product_sum(e.child(1));
    return is_sphere_product(e);
}

}  // namespace detail

// -----------------------------------------------------------------------------
// Degree sets
// -----------------------------------------------------------------------------

/**
 * Applies every matching rule, intersecting upper bounds and collecting
 * realized degrees. A rule may state D(M) exactly; if two rules disagree the
 * conflict is recorded in the trace and the set is marked inexact.
 */
inline DegreeSet degree_set(const ManifoldDescriptor& m) {
    struct Firing {
        std::string name;
        DegreeBound bound;
        bool exact;
        std::set<Int> known;
    };
    std::vector<Firing> fired;
    auto exact_rule = [&](std::string name, DegreeBound b) {
        fired.push_back({std::move(name), b, true, witnesses(b)});
    };
    auto bound_rule = [&](std::string name, DegreeBound b) {
        fired.push_back({std::move(name), b, false, {0, 1}});
    };

    const Expr& original = m.expr;
    const Expr normal = rewrite_spins(original);
    const bool rewritten = !(normal == original);
    const std::string via = rewritten ? " [after rewriting to " + to_string(normal) + "]" : "";

    // The CP spin identity is matched on the form before rewriting.
    if (original.kind() == ExprKind::Spin && original.child(0).kind() == ExprKind::CP && original.child(0).arg(0) >= 2) {
        exact_rule("spin-of-complex-projective: sigma_r(CP^n) = CP^{n-1} x S^{r+2} has D = Z",
                   DegreeBound::all_integers());
    }
    if (normal.kind() == ExprKind::Sphere) {
        exact_rule("sphere: D(S^n) = Z" + via, DegreeBound::all_integers());
    } else if (detail::is_sphere_product_sum(normal)) {
        exact_rule("sphere-products: products of spheres and their connected sums have D = Z" + via,
                   DegreeBound::all_integers());
    } else if (original.kind() == ExprKind::Spin && detail::is_sphere_product_sum(rewrite_spins(original.child(0)))) {
        // products of three or more spheres have no rewrite; the r-spin keeps D = Z
        exact_rule("spin-of-sphere-products: an r-spin of a connected sum of sphere products has D = Z",
                   DegreeBound::all_integers());
    }
    if (normal.kind() == ExprKind::Surface) {
        exact_rule("hyperbolic-surface: D(Sigma_g) = {-1, 0, 1}", DegreeBound::signed_unit());
    }
    if (normal.kind() == ExprKind::CP && normal.arg(0) >= 2) {
        exact_rule("complex-projective: D(CP^n) = {k^n}", DegreeBound::perfect_powers(normal.arg(0)));
    }

    for (const AxiomFact& f : m.facts) {
        if (f.kind != FactKind::KnownDegreeSet) continue;
        fired.push_back({"recorded degree set: " + to_string(f.degrees), f.degrees.upper, f.degrees.exact,
                         f.degrees.known});
    }
    if (m.has_fact(FactKind::Hyperbolic)) {
        bound_rule("hyperbolic: positive simplicial volume bounds D by {-1, 0, 1}", DegreeBound::signed_unit());
        if (m.dim == 3 && m.has_fact(FactKind::OddOrderIsometryGroup)) {
            exact_rule("hyperbolic-odd-isometry: degree +-1 maps are homotopic to isometries of odd order, "
                       "so D = {0, 1}",
                       DegreeBound::non_negative_unit());
        }
    }

    DegreeSet out;
    for (const Firing& f : fired) out.upper = intersect(out.upper, f.bound);
    if (out.upper.kind == BoundKind::SignedUnit) {
        if (auto cert = detail::direct_chirality_certificate(m)) {
            fired.push_back({"strongly-chiral: " + *cert + "; -1 removed from {-1, 0, 1}",
                             DegreeBound::non_negative_unit(), false, {0, 1}});
            out.upper = DegreeBound::non_negative_unit();
        }
    }

    bool conflict = false;
    for (const Firing& f : fired) {
        out.rules.push_back(f.name);
        for (Int d : f.known) {
            if (contains(out.upper, d)) {
                out.known.insert(d);
            } else {
                conflict = true;
            }
        }
        if (f.exact && f.bound == out.upper) out.exact = true;
        if (f.exact && !(f.bound == out.upper)) conflict = true;
    }
    if (!out.exact && !out.upper.unbounded() && out.upper.kind != BoundKind::PerfectPowers &&
        out.known == witnesses(out.upper)) {
        out.exact = true;  // finite bound fully realized
    }
    if (conflict) {
        out.exact = false;
        out.conflict = true;
        out.rules.push_back("conflict: the rules above disagree; check user-asserted facts");
    }
    if (fired.empty()) out.rules.push_back("no rule applies");
    return out;
}

// -----------------------------------------------------------------------------
// Chirality verdicts
// -----------------------------------------------------------------------------

enum class Verdict { ProvenStronglyChiral, AdmitsDegreeMinusOne, Inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ProvenStronglyChiral: return "ProvenStronglyChiral";
        case Verdict::AdmitsDegreeMinusOne: return "AdmitsDegreeMinusOne";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct ChiralityVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> trace;     // gates passed through, in order
    std::vector<std::string> blockers;  // Inconclusive only
};

/**
 * Gates, in order:
 *   1. linking-form obstruction (dimension 4m+3, cyclic Tor H^{2m+2} = Z_q,
 *      -1 not a square mod q);
 *   2. a recorded ExternallyProvenStronglyChiral fact;
 *   3. a degree-set bound that excludes -1;
 *   4. a degree-set witness for -1;
 * otherwise Inconclusive with the reason each gate failed.
 *
 * Throws ContradictionError when a proof of chirality meets a witness for -1.
 */
inline ChiralityVerdict chirality_verdict(const ManifoldDescriptor& m) {
    ChiralityVerdict v;
    const DegreeSet degrees = degree_set(m);
    if (degrees.conflict) {
        throw ContradictionError("contradictory degree-set rules for " + to_string(m.expr) + ": " +
                                 to_string(degrees));
    }
    auto proven = [&](std::string why) {
        if (degrees.contains_minus_one()) {
            throw ContradictionError("contradictory evidence for " + to_string(m.expr) + ": " + why +
                                     ", but the degree set " + to_string(degrees) + " contains -1");
        }
        v.verdict = Verdict::ProvenStronglyChiral;
        v.trace.push_back(std::move(why));
        return v;
    };

    const LinkingFormCheck lf = linking_form_check(m);
    if (lf.proves) return proven("linking-form obstruction: " + lf.detail);
    v.trace.push_back("linking-form obstruction not applicable: " + lf.detail);
    v.blockers.push_back(lf.detail);

    if (const AxiomFact* f = m.find_fact(FactKind::ExternallyProvenStronglyChiral)) {
        return proven("recorded fact: strongly chiral (" + f->citation + ")");
    }
    v.trace.push_back("no recorded chirality fact");
    v.blockers.push_back("no recorded chirality fact");

    if (degrees.excludes_minus_one()) {
        return proven("degree set " + to_string(degrees) + " excludes -1");
    }
    if (degrees.contains_minus_one()) {
        v.verdict = Verdict::AdmitsDegreeMinusOne;
        v.trace.push_back("degree set " + to_string(degrees) + " contains -1");
        v.blockers.clear();
        return v;
    }
    v.trace.push_back("degree set " + to_string(degrees) + " decides nothing about -1");
    v.blockers.push_back("degree set does not decide -1");
    return v;
}

}  // namespace chiral
