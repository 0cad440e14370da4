#pragma once

/**
 * @file reports.hpp
 * @brief Closed-form homology of the strongly chiral (4m+3)-spheres, theorem
 *        verification, and the table of 7-dimensional iterated spinnings.
 */

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "chiral/analysis.hpp"
#include "chiral/constructions.hpp"

namespace chiral {

/// Z at 0 and 4m+3, Z_{2p} at 1, 2m+1 and 4m+1.
inline GradedGroup closed_form_main(Int m, Int p) {
    const int n = static_cast<int>(4 * m + 3);
    GradedGroup h(n);
    h.set(0, AbGroup::integers());
    h.set(n, AbGroup::integers());
    for (int d : {1, static_cast<int>(2 * m + 1), static_cast<int>(4 * m + 1)}) h.set(d, AbGroup::cyclic(2 * p));
    return h;
}

/// Z at 0 and 4m+3, Z_{2p} at 2m+1.
inline GradedGroup closed_form_main2(Int m, Int p) {
    const int n = static_cast<int>(4 * m + 3);
    GradedGroup h(n);
    h.set(0, AbGroup::integers());
    h.set(n, AbGroup::integers());
    h.set(static_cast<int>(2 * m + 1), AbGroup::cyclic(2 * p));
    return h;
}

enum class Theorem { Main, Main2 };

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerificationReport {
    bool ok = true;
    std::vector<Check> checks;
    ManifoldDescriptor manifold;
};

/**
 * Builds the pipeline for (m, p) and checks: homology against the closed
 * form, the chirality verdict, that pi_1 is the hyperbolic factor's group,
 * and that the result passes duality and realizability validation.
 */
inline VerificationReport verify_theorem(Theorem which, Int m, Int p) {
    const PipelineBuild build = which == Theorem::Main ? build_main(m, p) : build_main2(m, p);
    const GradedGroup expected = which == Theorem::Main ? closed_form_main(m, p) : closed_form_main2(m, p);
    const ManifoldDescriptor& M = build.manifold;

    VerificationReport r;
    r.manifold = M;
    auto add = [&](std::string name, bool ok, std::string detail) {
        r.ok = r.ok && ok;
        r.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    add("homology", M.homology == expected,
        "computed " + to_string(M.homology) + ", expected " + to_string(expected));
    const ChiralityVerdict v = chirality_verdict(M);
    add("chirality", v.verdict == Verdict::ProvenStronglyChiral,
        std::string(verdict_name(v.verdict)) + (v.trace.empty() ? "" : ": " + v.trace.back()));
    add("pi1", M.pi1 == build.hyperbolic_factor.pi1 && M.pi1.kind() == Pi1Kind::HyperbolicThreeManifoldGroup,
        "pi1 = " + to_string(M.pi1) + ", hyperbolic factor " + to_string(build.hyperbolic_factor.expr) +
            " has " + to_string(build.hyperbolic_factor.pi1));
    const DualityReport dual = check_poincare_duality(M.homology, M.dim);
    add("duality", dual.ok, dual.ok ? "ok" : dual.message);
    const auto violations = validate_realizability(M);
    add("realizability", violations.empty(),
        violations.empty() ? "no violations" : violations.front().message);
    return r;
}

// -----------------------------------------------------------------------------
// Iterated spinnings
// -----------------------------------------------------------------------------

/// Partitions of n into at least two parts, parts in descending order.
/// Ordered by number of parts (descending), then lexicographically descending.
inline std::vector<std::vector<Int>> iterated_spin_partitions(Int n) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> current;
    std::function<void(Int, Int)> rec = [&](Int remaining, Int max_part) {
        if (remaining == 0) {
            if (current.size() >= 2) out.push_back(current);
            return;
        }
        for (Int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a > b;
    });
    return out;
}

/// sigma_{r_1} sigma_{r_2} ... sigma_{r_k}(M): r_k is applied first.
inline ManifoldDescriptor spin_word(const std::vector<Int>& radii, const ManifoldDescriptor& m) {
    return iterated_spin(std::vector<Int>(radii.rbegin(), radii.rend()), m);
}

inline std::string spin_label(const std::vector<Int>& radii, const std::string& base) {
    std::string s;
    for (Int r : radii) s += "σ" + std::to_string(r);
    return s + "(" + base + ")";
}

struct SpinTableRow {
    std::vector<Int> radii;
    std::string label;
    AbGroup h3;
    std::size_t permutations = 0;    // distinct orderings evaluated
    bool order_independent = true;  // all orderings gave identical homology
};

/// All 7-dimensional iterated spinnings of N(p) and their H_3.
inline std::vector<SpinTableRow> table1(Int p) {
    const ManifoldDescriptor base = dehn_rhs(p);
    const std::string base_name = "N_" + std::to_string(p);
    std::vector<SpinTableRow> rows;
    for (const auto& radii : iterated_spin_partitions(4)) {
        SpinTableRow row;
        row.radii = radii;
        row.label = spin_label(radii, base_name);
        const ManifoldDescriptor reference = spin_word(radii, base);
        row.h3 = reference.homology.at(3);

        std::vector<Int> perm = radii;
        std::sort(perm.begin(), perm.end());
        do {
            ++row.permutations;
            if (spin_word(perm, base).homology != reference.homology) row.order_independent = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string render_table1(const std::vector<SpinTableRow>& rows, Int p) {
    std::ostringstream os;
    os << "7-dimensional iterated spinnings of N_" << p << " (H_1 = Z_" << 2 * p << ")\n";
    os << "spinning            H_3         orderings\n";
    for (const auto& row : rows) {
        std::string label = row.label;
        // sigma is two bytes in UTF-8 but one column wide
        const std::size_t width = label.size() - row.radii.size();
        os << label << std::string(width < 20 ? 20 - width : 1, ' ');
        const std::string h3 = to_string(row.h3);
        os << h3 << std::string(h3.size() < 12 ? 12 - h3.size() : 1, ' ');
        os << row.permutations << (row.order_independent ? " (identical)" : " (MISMATCH)") << '\n';
    }
    return os.str();
}

}  // namespace chiral
