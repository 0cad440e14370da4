#pragma once

/**
 * @file manifold.hpp
 * @brief ManifoldDescriptor: a closed connected oriented manifold described
 *        by its construction, integral homology, fundamental-group tag,
 *        connectivity and axiomatized facts.
 */

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiral/degree_set.hpp"
#include "chiral/expr.hpp"
#include "chiral/graded_group.hpp"

namespace chiral {

/// Raised when an operation's precondition is violated by its arguments.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// -----------------------------------------------------------------------------
// Fundamental group tags
// -----------------------------------------------------------------------------

enum class Pi1Kind {
    Trivial,
    FiniteCyclic,                  // param = order
    FreeAbelian,                   // param = rank
    HyperbolicThreeManifoldGroup,  // param = generator id
    SurfaceGroup,                  // param = genus
    FreeProduct,
    DirectProduct,
    Unknown,
};

/**
 * Structural description of pi_1. Products are flattened and never contain
 * Trivial entries; a product with fewer than two remaining factors collapses
 * to that factor.
 */
class Pi1Tag {
public:
    Pi1Tag() = default;

    static Pi1Tag trivial() { return {}; }
    static Pi1Tag unknown() { return Pi1Tag(Pi1Kind::Unknown, 0); }
    static Pi1Tag finite_cyclic(Int order) {
        if (order < 1) throw std::invalid_argument("finite_cyclic: order must be >= 1");
        return order == 1 ? trivial() : Pi1Tag(Pi1Kind::FiniteCyclic, order);
    }
    static Pi1Tag free_abelian(Int rank) {
        if (rank < 0) throw std::invalid_argument("free_abelian: negative rank");
        return rank == 0 ? trivial() : Pi1Tag(Pi1Kind::FreeAbelian, rank);
    }
    static Pi1Tag hyperbolic_3manifold(Int generator_id) {
        return Pi1Tag(Pi1Kind::HyperbolicThreeManifoldGroup, generator_id);
    }
    static Pi1Tag surface(Int genus) { return Pi1Tag(Pi1Kind::SurfaceGroup, genus); }

    static Pi1Tag free_product(const std::vector<Pi1Tag>& parts) { return combine(Pi1Kind::FreeProduct, parts); }
    static Pi1Tag direct_product(const std::vector<Pi1Tag>& parts) { return combine(Pi1Kind::DirectProduct, parts); }

    Pi1Kind kind() const noexcept { return kind_; }
    Int param() const noexcept { return param_; }
    const std::vector<Pi1Tag>& parts() const noexcept { return parts_; }
    bool is_trivial() const noexcept { return kind_ == Pi1Kind::Trivial; }

    friend bool operator==(const Pi1Tag&, const Pi1Tag&) = default;

private:
    Pi1Tag(Pi1Kind k, Int param) : kind_(k), param_(param) {}

    static Pi1Tag combine(Pi1Kind k, const std::vector<Pi1Tag>& parts) {
        std::vector<Pi1Tag> flat;
        for (const auto& p : parts) {
            if (p.is_trivial()) continue;
            if (p.kind_ == k) {
                flat.insert(flat.end(), p.parts_.begin(), p.parts_.end());
            } else {
                flat.push_back(p);
            }
        }
        if (flat.empty()) return trivial();
        if (flat.size() == 1) return flat.front();
        Pi1Tag t(k, 0);
        t.parts_ = std::move(flat);
        return t;
    }

    Pi1Kind kind_ = Pi1Kind::Trivial;
    Int param_ = 0;
    std::vector<Pi1Tag> parts_;
};

inline std::string to_string(const Pi1Tag& t) {
    auto join = [&](const char* sep) {
        std::string s = "(";
        for (std::size_t i = 0; i < t.parts().size(); ++i) {
            if (i) s += sep;
            s += to_string(t.parts()[i]);
        }
        return s + ")";
    };
    switch (t.kind()) {
        case Pi1Kind::Trivial: return "1";
        case Pi1Kind::FiniteCyclic: return "Z_" + std::to_string(t.param());
        case Pi1Kind::FreeAbelian: return t.param() == 1 ? "Z" : "Z^" + std::to_string(t.param());
        case Pi1Kind::HyperbolicThreeManifoldGroup: return "pi1(H3#" + std::to_string(t.param()) + ")";
        case Pi1Kind::SurfaceGroup: return "pi1(Sigma_" + std::to_string(t.param()) + ")";
        case Pi1Kind::FreeProduct: return join(" * ");
        case Pi1Kind::DirectProduct: return join(" x ");
        case Pi1Kind::Unknown: return "?";
    }
    return "?";
}

// -----------------------------------------------------------------------------
// Axiomatized facts
// -----------------------------------------------------------------------------

enum class FactKind {
    Hyperbolic,                      // admits a closed real hyperbolic metric
    OddOrderIsometryGroup,           // full isometry group has odd order
    ExternallyProvenStronglyChiral,  // citation carries the source
    KnownDegreeSet,
};

struct AxiomFact {
    FactKind kind;
    std::string citation;  // ExternallyProvenStronglyChiral only
    DegreeSet degrees;     // KnownDegreeSet only

    static AxiomFact hyperbolic() { return {FactKind::Hyperbolic, {}, {}}; }
    static AxiomFact odd_order_isometry_group() { return {FactKind::OddOrderIsometryGroup, {}, {}}; }
    static AxiomFact externally_proven_strongly_chiral(std::string citation) {
        if (citation.empty()) throw PreconditionError("a strong-chirality fact needs a citation");
        return {FactKind::ExternallyProvenStronglyChiral, std::move(citation), {}};
    }
    static AxiomFact known_degree_set(DegreeSet d) { return {FactKind::KnownDegreeSet, {}, std::move(d)}; }
};

inline const char* fact_name(FactKind k) {
    switch (k) {
        case FactKind::Hyperbolic: return "Hyperbolic";
        case FactKind::OddOrderIsometryGroup: return "OddOrderIsometryGroup";
        case FactKind::ExternallyProvenStronglyChiral: return "ExternallyProvenStronglyChiral";
        case FactKind::KnownDegreeSet: return "KnownDegreeSet";
    }
    return "?";
}

inline std::string to_string(const AxiomFact& f) {
    switch (f.kind) {
        case FactKind::ExternallyProvenStronglyChiral:
            return std::string(fact_name(f.kind)) + "(" + f.citation + ")";
        case FactKind::KnownDegreeSet: return std::string(fact_name(f.kind)) + "(" + to_string(f.degrees) + ")";
        default: return fact_name(f.kind);
    }
}

// -----------------------------------------------------------------------------
// Descriptor
// -----------------------------------------------------------------------------

struct ManifoldDescriptor {
    Expr expr = Expr::sphere(1);  // every constructor overwrites this
    int dim = 0;
    GradedGroup homology;
    Pi1Tag pi1;
    int connectivity = 0;
    std::vector<AxiomFact> facts;

    bool has_fact(FactKind k) const {
        return std::any_of(facts.begin(), facts.end(), [k](const AxiomFact& f) { return f.kind == k; });
    }
    const AxiomFact* find_fact(FactKind k) const {
        auto it = std::find_if(facts.begin(), facts.end(), [k](const AxiomFact& f) { return f.kind == k; });
        return it == facts.end() ? nullptr : &*it;
    }

    GradedGroup cohomology() const { return cohomology_from_homology(homology, dim); }
    Int euler_characteristic() const { return chiral::euler_characteristic(homology); }
};

/// Fresh generator ids; distinct generators are never assumed homeomorphic.
inline Int next_generator_id() {
    static std::atomic<Int> counter{0};
    return ++counter;
}

/**
 * Connectivity implied by the homology and pi_1 tag. A space with trivial
 * pi_1 is c-connected exactly when reduced homology vanishes through degree
 * c (Hurewicz); otherwise the only claim is path-connectedness.
 */
inline int connectivity_from(const GradedGroup& homology, const Pi1Tag& pi1, int dim) {
    if (!pi1.is_trivial()) return 0;
    for (int i = 1; i <= dim; ++i) {
        if (!homology.at(i).is_trivial()) return i - 1;
    }
    return dim - 1;
}

/// Throws std::logic_error when a descriptor breaks one of its invariants.
inline void check_descriptor(const ManifoldDescriptor& m) {
    auto fail = [&](const std::string& why) {
        throw std::logic_error("invalid descriptor for " + to_string(m.expr) + ": " + why);
    };
    if (m.dim < 1) fail("dimension must be positive");
    if (m.homology.top() != m.dim) fail("homology top degree differs from dimension");
    if (auto report = check_poincare_duality(m.homology, m.dim); !report) fail(report.message);
    if (m.pi1.is_trivial() && !m.homology.at(1).is_trivial()) fail("trivial pi_1 with nonzero H_1");
    for (int i = 1; i <= m.connectivity; ++i) {
        if (!m.homology.at(i).is_trivial()) fail("connectivity claims H_" + std::to_string(i) + " = 0");
    }
}

/// User assertion of an axiomatized fact.
inline ManifoldDescriptor assert_fact(ManifoldDescriptor m, AxiomFact fact) {
    m.facts.push_back(std::move(fact));
    return m;
}

/// H_i(M minus an open n-disk): H_i(M) for i < n, trivial at i = n.
inline GradedGroup punctured_homology(const GradedGroup& h, int n) {
    GradedGroup out = h.with_top(n);
    out.set(n, AbGroup{});
    return out;
}

inline GradedGroup punctured_homology(const ManifoldDescriptor& m) {
    return punctured_homology(m.homology, m.dim);
}

// -----------------------------------------------------------------------------
// Realizability
// -----------------------------------------------------------------------------

enum class ViolationKind {
    CyclicTorsionInDimension1Mod4,  // Tor H^{k+1} = Z_q, q > 2, in dimension 4m+1
    HyperbolicEulerSign,            // (-1)^{n/2} chi > 0 fails
    HyperbolicRationalSphere4m2,    // hyperbolic rational homology sphere of dimension 4m+2
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

inline const char* violation_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::CyclicTorsionInDimension1Mod4: return "cyclic-torsion-dim-1-mod-4";
        case ViolationKind::HyperbolicEulerSign: return "hyperbolic-euler-sign";
        case ViolationKind::HyperbolicRationalSphere4m2: return "hyperbolic-rational-sphere-4m+2";
    }
    return "?";
}

inline bool is_rational_homology_sphere(const GradedGroup& h, int dim) {
    for (int i = 1; i < dim; ++i) {
        if (h.at(i).rank() != 0) return false;
    }
    return true;
}

/// Obstructions no closed oriented manifold with these invariants can avoid.
inline std::vector<Violation> validate_realizability(const ManifoldDescriptor& m) {
    std::vector<Violation> out;

    if (m.dim % 4 == 1) {
        const int k = (m.dim - 1) / 2;
        const AbGroup tor = m.cohomology().at(k + 1).torsion();
        if (auto q = cyclic_order(tor); q && *q > 2) {
            out.push_back({ViolationKind::CyclicTorsionInDimension1Mod4,
                           "dimension " + std::to_string(m.dim) + " = 2k+1 with k even, but Tor H^" +
                               std::to_string(k + 1) + " = Z_" + std::to_string(*q) +
                               " is cyclic of order > 2; the skew-symmetric linking form forbids this"});
        }
    }

    if (m.has_fact(FactKind::Hyperbolic) && m.dim % 2 == 0) {
        const Int chi = m.euler_characteristic();
        const Int sign = (m.dim / 2) % 2 == 0 ? 1 : -1;
        if (sign * chi <= 0) {
            out.push_back({ViolationKind::HyperbolicEulerSign,
                           "hyperbolic of dimension " + std::to_string(m.dim) + " requires (-1)^" +
                               std::to_string(m.dim / 2) + " chi > 0, but chi = " + std::to_string(chi)});
        }
        if (m.dim % 4 == 2 && is_rational_homology_sphere(m.homology, m.dim)) {
            out.push_back({ViolationKind::HyperbolicRationalSphere4m2,
                           "no hyperbolic rational homology sphere exists in dimension " +
                               std::to_string(m.dim) + " (4m+2)"});
        }
    }
    return out;
}

}  // namespace chiral
