#pragma once

/**
 * @file constructions.hpp
 * @brief Generators and combinators of the manifold calculus.
 *
 * Every function returns a descriptor that has been checked against the
 * descriptor invariants (closed, connected, oriented, Poincare duality).
 * Facts are attached only by generators; combinators never carry them over.
 */

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "chiral/manifold.hpp"
#include "chiral/residue.hpp"

namespace chiral {

namespace detail {

inline ManifoldDescriptor finish(ManifoldDescriptor m) {
    m.connectivity = connectivity_from(m.homology, m.pi1, m.dim);
    check_descriptor(m);
    return m;
}

inline int to_dim(Int n, const char* what) {
    if (n > 100000) throw PreconditionError(std::string(what) + ": dimension " + std::to_string(n) + " is too large");
    return static_cast<int>(n);
}

inline void require(bool ok, const std::string& message) {
    if (!ok) throw PreconditionError(message);
}

}  // namespace detail

// -----------------------------------------------------------------------------
// Generators
// -----------------------------------------------------------------------------

inline ManifoldDescriptor sphere(Int n) {
    detail::require(n >= 1, "S(n): dimension must be >= 1, got " + std::to_string(n));
    const int dim = detail::to_dim(n, "S(n)");
    ManifoldDescriptor m;
    m.expr = Expr::sphere(n);
    m.dim = dim;
    m.homology = GradedGroup(dim);
    m.homology.set(0, AbGroup::integers());
    m.homology.set(dim, AbGroup::integers());
    m.pi1 = dim == 1 ? Pi1Tag::free_abelian(1) : Pi1Tag::trivial();
    m.facts.push_back(AxiomFact::known_degree_set(DegreeSet::exactly(DegreeBound::all_integers())));
    return detail::finish(std::move(m));
}

inline ManifoldDescriptor complex_projective(Int n) {
    detail::require(n >= 1, "CP(n): n must be >= 1, got " + std::to_string(n));
    const int dim = detail::to_dim(detail::checked_mul(2, n), "CP(n)");
    ManifoldDescriptor m;
    m.expr = Expr::cp(n);
    m.dim = dim;
    m.homology = GradedGroup(dim);
    for (int i = 0; i <= dim; i += 2) m.homology.set(i, AbGroup::integers());
    m.pi1 = Pi1Tag::trivial();
    return detail::finish(std::move(m));
}

/// Closed orientable surface of genus g >= 2 (hyperbolic).
inline ManifoldDescriptor surface(Int genus) {
    detail::require(genus >= 2, "Sigma(g): genus must be >= 2, got " + std::to_string(genus));
    ManifoldDescriptor m;
    m.expr = Expr::surface(genus);
    m.dim = 2;
    m.homology = GradedGroup::from_list(
        {AbGroup::integers(), AbGroup::free(detail::checked_mul(2, genus)), AbGroup::integers()});
    m.pi1 = Pi1Tag::surface(genus);
    m.facts.push_back(AxiomFact::hyperbolic());
    return detail::finish(std::move(m));
}

/// Lens space S^dim / Z_p: Z_p in every odd degree below dim.
inline ManifoldDescriptor lens(Int p, Int dim) {
    detail::require(p >= 2, "L(p, dim): p must be >= 2, got " + std::to_string(p));
    detail::require(dim >= 3 && dim % 2 == 1,
                    "L(p, dim): dimension must be odd and >= 3, got " + std::to_string(dim));
    const int n = detail::to_dim(dim, "L(p, dim)");
    ManifoldDescriptor m;
    m.expr = Expr::lens(p, dim);
    m.dim = n;
    m.homology = GradedGroup(n);
    m.homology.set(0, AbGroup::integers());
    for (int i = 1; i <= n - 2; i += 2) m.homology.set(i, AbGroup::cyclic(p));
    m.homology.set(n, AbGroup::integers());
    m.pi1 = Pi1Tag::finite_cyclic(p);
    return detail::finish(std::move(m));
}

/**
 * Hyperbolic rational homology 3-sphere with H_1 = Z_{2p}, from a (2p, q)
 * Dehn filling on a hyperbolic knot complement. Hyperbolicity and the
 * odd-order isometry group are axioms; q is not modeled.
 */
inline ManifoldDescriptor dehn_rhs(Int p) {
    detail::require(is_prime(p), "N(p): p must be prime, got " + std::to_string(p));
    ManifoldDescriptor m;
    m.expr = Expr::dehn_rhs(p);
    m.dim = 3;
    m.homology = GradedGroup::from_list({AbGroup::integers(), AbGroup::cyclic(detail::checked_mul(2, p)),
                                         AbGroup{}, AbGroup::integers()});
    m.pi1 = Pi1Tag::hyperbolic_3manifold(next_generator_id());
    m.facts.push_back(AxiomFact::hyperbolic());
    m.facts.push_back(AxiomFact::odd_order_isometry_group());
    return detail::finish(std::move(m));
}

/// Closed hyperbolic integral homology 3-sphere.
inline ManifoldDescriptor ihs3() {
    ManifoldDescriptor m;
    m.expr = Expr::ihs3();
    m.dim = 3;
    m.homology = GradedGroup::from_list({AbGroup::integers(), AbGroup{}, AbGroup{}, AbGroup::integers()});
    m.pi1 = Pi1Tag::hyperbolic_3manifold(next_generator_id());
    m.facts.push_back(AxiomFact::hyperbolic());
    return detail::finish(std::move(m));
}

/**
 * Total space of the S^{2m+1}-bundle over S^{2m+2} pulled back from the unit
 * tangent bundle along a map of degree d, so the Euler number is 2d.
 *
 * The Gysin sequence gives H^* = Z at 0 and 4m+3, Z_{2|d|} at 2m+2, and
 * nothing else; homology follows from the Universal Coefficient Theorem.
 */
inline ManifoldDescriptor bundle(Int m, Int d) {
    detail::require(m >= 0, "E(m, d): m must be >= 0, got " + std::to_string(m));
    detail::require(d != 0, "E(m, d): Euler multiple d must be nonzero (d = 0 is S^{2m+1} x S^{2m+2}, use prod)");
    detail::require(d != std::numeric_limits<Int>::min(), "E(m, d): |d| out of range");
    const int dim = detail::to_dim(detail::checked_add(detail::checked_mul(4, m), 3), "E(m, d)");
    const int mid = static_cast<int>(2 * m + 2);
    const Int torsion = detail::checked_mul(2, d < 0 ? -d : d);

    GradedGroup cohom(dim);
    cohom.set(0, AbGroup::integers());
    cohom.set(mid, AbGroup::cyclic(torsion));
    cohom.set(dim, AbGroup::integers());

    ManifoldDescriptor e;
    e.expr = Expr::bundle(m, d);
    e.dim = dim;
    e.homology = homology_from_cohomology(cohom, dim);
    e.pi1 = m == 0 ? Pi1Tag::finite_cyclic(torsion) : Pi1Tag::trivial();
    return detail::finish(std::move(e));
}

// -----------------------------------------------------------------------------
// Combinators
// -----------------------------------------------------------------------------

inline ManifoldDescriptor connected_sum(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
    detail::require(a.dim == b.dim, "csum: dimensions differ (" + std::to_string(a.dim) + " vs " +
                                        std::to_string(b.dim) + ")");
    detail::require(a.dim >= 3, "csum: dimension must be >= 3, got " + std::to_string(a.dim));
    const int n = a.dim;
    ManifoldDescriptor m;
    m.expr = Expr::csum(a.expr, b.expr);
    m.dim = n;
    m.homology = GradedGroup(n);
    m.homology.set(0, AbGroup::integers());
    m.homology.set(n, AbGroup::integers());
    for (int i = 1; i < n; ++i) m.homology.set(i, direct_sum(a.homology.at(i), b.homology.at(i)));
    m.pi1 = Pi1Tag::free_product({a.pi1, b.pi1});
    return detail::finish(std::move(m));
}

/// Kunneth: H_k = sum_{i+j=k} H_i (x) H_j  +  sum_{i+j=k-1} Tor(H_i, H_j).
inline GradedGroup kunneth(const GradedGroup& a, const GradedGroup& b) {
    GradedGroup out(a.top() + b.top());
    for (const auto& [i, gi] : a.nonzero()) {
        for (const auto& [j, gj] : b.nonzero()) {
            out.add(i + j, tensor(gi, gj));
            if (i + j + 1 <= out.top()) out.add(i + j + 1, tor_product(gi, gj));
        }
    }
    return out;
}

inline ManifoldDescriptor product(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
    ManifoldDescriptor m;
    m.expr = Expr::prod(a.expr, b.expr);
    m.dim = a.dim + b.dim;
    m.homology = kunneth(a.homology, b.homology);
    m.pi1 = Pi1Tag::direct_product({a.pi1, b.pi1});
    return detail::finish(std::move(m));
}

/// H_i(sigma_r M) = H_i(M minus disk) + reduced H_{i-r}(M).
inline GradedGroup spin_homology(const GradedGroup& h, int n, int r) {
    return direct_sum(punctured_homology(h, n).with_top(n + r), shift(reduced(h), r, n + r));
}

/**
 * r-spin: the boundary of (M minus an open disk) x D^{r+1}, of dimension
 * dim M + r. In dimension >= 3 pi_1 is unchanged. Surfaces with nontrivial
 * pi_1 go through sigma_r(Sigma_g) = #_{2g}(S^{r+1} x S^1) instead, since
 * the pi_1 statement fails there (the torus counts as genus 1).
 */
inline ManifoldDescriptor spin(Int r, const ManifoldDescriptor& m) {
    detail::require(r >= 1, "spin: spin radius must be >= 1, got " + std::to_string(r));
    detail::require(m.dim >= 2, "spin: dimension must be >= 2, got " + std::to_string(m.dim));
    const int rr = detail::to_dim(r, "spin");

    if (m.dim == 2 && !m.pi1.is_trivial()) {
        const AbGroup h1 = m.homology.at(1);
        detail::require(h1.is_free() && h1.rank() % 2 == 0 && h1.rank() > 0,
                        "spin: unsupported 2-dimensional input " + to_string(m.expr));
        const Int copies = h1.rank();  // 2g
        const ManifoldDescriptor piece = product(sphere(r + 1), sphere(1));
        ManifoldDescriptor sum = piece;
        for (Int i = 1; i < copies; ++i) sum = connected_sum(sum, piece);
        sum.expr = Expr::spin(r, m.expr);
        return sum;
    }

    ManifoldDescriptor out;
    out.expr = Expr::spin(r, m.expr);
    out.dim = m.dim + rr;
    out.homology = spin_homology(m.homology, m.dim, rr);
    out.pi1 = m.pi1;
    return detail::finish(std::move(out));
}

/// sigma_{r_k} ... sigma_{r_1}(M): folds spin over radii from the left.
inline ManifoldDescriptor iterated_spin(const std::vector<Int>& radii, const ManifoldDescriptor& m) {
    detail::require(m.dim >= 3, "iterated_spin: dimension must be >= 3, got " + std::to_string(m.dim));
    ManifoldDescriptor out = m;
    for (Int r : radii) out = spin(r, out);
    return out;
}

// -----------------------------------------------------------------------------
// Strongly chiral rational homology (4m+3)-spheres
// -----------------------------------------------------------------------------

struct PipelineBuild {
    ManifoldDescriptor manifold;
    /// The hyperbolic 3-manifold whose fundamental group the result carries.
    ManifoldDescriptor hyperbolic_factor;
};

namespace detail {

inline void require_pipeline_args(Int m, Int p) {
    require(m >= 0, "m must be >= 0, got " + std::to_string(m));
    require(is_prime(p), "p must be prime, got " + std::to_string(p));
    require(p % 4 == 3, "p must be 3 mod 4, got " + std::to_string(p));
}

}  // namespace detail

/// E_m # sigma_{4m}(N_p); N_p itself for m = 0.
inline PipelineBuild build_main(Int m, Int p) {
    detail::require_pipeline_args(m, p);
    ManifoldDescriptor n = dehn_rhs(p);
    if (m == 0) return {n, n};
    ManifoldDescriptor spun = spin(detail::checked_mul(4, m), n);
    return {connected_sum(bundle(m, p), spun), n};
}

/// E_m # sigma_{4m}(IHS3); N_p itself for m = 0.
inline PipelineBuild build_main2(Int m, Int p) {
    detail::require_pipeline_args(m, p);
    if (m == 0) {
        ManifoldDescriptor n = dehn_rhs(p);
        return {n, n};
    }
    ManifoldDescriptor h = ihs3();
    return {connected_sum(bundle(m, p), spin(detail::checked_mul(4, m), h)), h};
}

inline ManifoldDescriptor pipeline_main(Int m, Int p) { return build_main(m, p).manifold; }
inline ManifoldDescriptor pipeline_main2(Int m, Int p) { return build_main2(m, p).manifold; }

// -----------------------------------------------------------------------------
// Evaluation
// -----------------------------------------------------------------------------

inline ManifoldDescriptor evaluate(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Sphere: return sphere(e.arg(0));
        case ExprKind::CP: return complex_projective(e.arg(0));
        case ExprKind::Surface: return surface(e.arg(0));
        case ExprKind::Lens: return lens(e.arg(0), e.arg(1));
        case ExprKind::DehnRHS: return dehn_rhs(e.arg(0));
        case ExprKind::IHS3: return ihs3();
        case ExprKind::Bundle: return bundle(e.arg(0), e.arg(1));
        case ExprKind::Spin: return spin(e.arg(0), evaluate(e.child(0)));
        case ExprKind::CSum: return connected_sum(evaluate(e.child(0)), evaluate(e.child(1)));
        case ExprKind::Prod: return product(evaluate(e.child(0)), evaluate(e.child(1)));
    }
    throw std::logic_error("evaluate: unhandled expression kind");
}

}  // namespace chiral
