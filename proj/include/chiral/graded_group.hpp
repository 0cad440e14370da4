#pragma once

/**
 * @file graded_group.hpp
 * @brief Graded abelian groups H_0, ..., H_top and the homological toolkit
 *        used on closed oriented manifolds: reduced groups, degree shifts,
 *        the torsion form of Poincare duality, Universal Coefficient
 *        conversions and the Euler characteristic.
 *
 * Storage is sparse. Trivial groups are never stored, so structural equality
 * of two GradedGroup values is degreewise isomorphism.
 */

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiral/abelian_group.hpp"

namespace chiral {

class GradedGroup {
public:
    GradedGroup() = default;
    explicit GradedGroup(int top) : top_(check_top(top)) {}

    /// Degree i of the result is groups[i]; top degree is groups.size() - 1.
    static GradedGroup from_list(const std::vector<AbGroup>& groups) {
        if (groups.empty()) throw std::invalid_argument("GradedGroup::from_list: empty list");
        GradedGroup h(static_cast<int>(groups.size()) - 1);
        for (std::size_t i = 0; i < groups.size(); ++i) h.set(static_cast<int>(i), groups[i]);
        return h;
    }

    int top() const noexcept { return top_; }

    AbGroup at(int degree) const {
        auto it = groups_.find(degree);
        return it == groups_.end() ? AbGroup{} : it->second;
    }

    void set(int degree, const AbGroup& g) {
        check_degree(degree);
        if (g.is_trivial()) {
            groups_.erase(degree);
        } else {
            groups_[degree] = g;
        }
    }

    /// Adds g into degree `degree` (direct sum with what is already there).
    void add(int degree, const AbGroup& g) {
        if (g.is_trivial()) return;
        set(degree, direct_sum(at(degree), g));
    }

    /// Same groups, new ambient top degree.
    GradedGroup with_top(int new_top) const {
        GradedGroup out(new_top);
        for (const auto& [d, g] : groups_) out.set(d, g);
        return out;
    }

    /// Nontrivial degrees and their groups, ascending.
    const std::map<int, AbGroup>& nonzero() const noexcept { return groups_; }

    bool is_trivial() const noexcept { return groups_.empty(); }

    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

private:
    static int check_top(int top) {
        if (top < 0) throw std::invalid_argument("GradedGroup: negative top degree");
        return top;
    }
    void check_degree(int degree) const {
        if (degree < 0 || degree > top_) {
            throw std::out_of_range("GradedGroup: degree " + std::to_string(degree) +
                                    " outside [0, " + std::to_string(top_) + "]");
        }
    }

    int top_ = 0;
    std::map<int, AbGroup> groups_;
};

/// Degreewise direct sum; the top degree is the larger of the two.
inline GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b) {
    GradedGroup out = a.with_top(std::max(a.top(), b.top()));
    for (const auto& [d, g] : b.nonzero()) out.add(d, g);
    return out;
}

/// Degree i of the result is degree i - r of h.
inline GradedGroup shift(const GradedGroup& h, int r, int new_top) {
    if (r < 1) throw std::invalid_argument("shift: r must be positive");
    if (new_top < h.top() + r) {
        throw std::invalid_argument("shift: new top " + std::to_string(new_top) +
                                    " is below top + r = " + std::to_string(h.top() + r));
    }
    GradedGroup out(new_top);
    for (const auto& [d, g] : h.nonzero()) out.set(d + r, g);
    return out;
}

/// Reduced homology of a connected space: drops one Z from degree 0.
inline GradedGroup reduced(const GradedGroup& h) {
    if (h.at(0) != AbGroup::integers()) {
        throw std::invalid_argument("reduced: degree 0 is " + to_string(h.at(0)) +
                                    ", expected Z (connected space)");
    }
    GradedGroup out = h;
    out.set(0, AbGroup{});
    return out;
}

inline Int euler_characteristic(const GradedGroup& h) {
    Int chi = 0;
    for (const auto& [d, g] : h.nonzero()) chi += (d % 2 == 0 ? g.rank() : -g.rank());
    return chi;
}

struct DualityReport {
    bool ok = true;
    std::optional<int> degree;  // first offending degree
    std::string message;

    explicit operator bool() const noexcept { return ok; }
};

/**
 * Checks the torsion form of Poincare duality for a closed oriented
 * n-manifold: rank H_i = rank H_{n-i}, and Tor H_i = Tor H_{n-i-1}.
 * Also requires H_0 = H_n = Z.
 */
inline DualityReport check_poincare_duality(const GradedGroup& h, int n) {
    auto fail = [](int d, std::string msg) { return DualityReport{false, d, std::move(msg)}; };
    if (h.top() != n) {
        return fail(n, "top degree " + std::to_string(h.top()) + " differs from dimension " +
                           std::to_string(n));
    }
    if (h.at(0) != AbGroup::integers()) return fail(0, "H_0 = " + to_string(h.at(0)) + ", expected Z");
    if (h.at(n) != AbGroup::integers()) {
        return fail(n, "H_" + std::to_string(n) + " = " + to_string(h.at(n)) + ", expected Z");
    }
    for (int i = 0; i <= n; ++i) {
        const AbGroup hi = h.at(i);
        const AbGroup dual = h.at(n - i);
        if (hi.rank() != dual.rank()) {
            return fail(i, "rank H_" + std::to_string(i) + " = " + std::to_string(hi.rank()) +
                               " but rank H_" + std::to_string(n - i) + " = " +
                               std::to_string(dual.rank()));
        }
        const AbGroup tor_dual = (n - i - 1 >= 0) ? h.at(n - i - 1).torsion() : AbGroup{};
        if (hi.torsion() != tor_dual) {
            return fail(i, "Tor H_" + std::to_string(i) + " = " + to_string(hi.torsion()) +
                               " but Tor H_" + std::to_string(n - i - 1) + " = " +
                               to_string(tor_dual));
        }
    }
    return {};
}

/// H^i = Z^{rank H_i} + Tor H_{i-1}.
inline GradedGroup cohomology_from_homology(const GradedGroup& h, int n) {
    GradedGroup c(std::max(n, h.top()));
    for (const auto& [d, g] : h.nonzero()) {
        c.add(d, g.free_part());
        if (d + 1 <= c.top()) c.add(d + 1, g.torsion());
    }
    return c;
}

/// H_i = Z^{rank H^i} + Tor H^{i+1}. Inverse of cohomology_from_homology.
inline GradedGroup homology_from_cohomology(const GradedGroup& c, int n) {
    for (int d : {0, 1}) {
        if (!c.at(d).torsion().is_trivial()) {
            throw std::invalid_argument("homology_from_cohomology: torsion " +
                                        to_string(c.at(d).torsion()) + " in H^" + std::to_string(d) +
                                        " has no homological preimage");
        }
    }
    GradedGroup h(std::max(n, c.top()));
    for (const auto& [d, g] : c.nonzero()) {
        h.add(d, g.free_part());
        h.add(d - 1, g.torsion());
    }
    return h;
}

/**
 * Case-display rendering, e.g.
 *
 *     H_i = Z      for i = 0, 7
 *           Z_14   for i = 1, 3, 5
 *           0      otherwise
 */
inline std::string render_cases(const GradedGroup& h, const std::string& label = "H_i") {
    std::map<AbGroup, std::vector<int>> by_group;
    std::vector<AbGroup> order;
    for (const auto& [d, g] : h.nonzero()) {
        auto [it, inserted] = by_group.try_emplace(g);
        if (inserted) order.push_back(g);
        it->second.push_back(d);
    }
    std::size_t width = 1;
    for (const auto& g : order) width = std::max(width, to_string(g).size());

    std::ostringstream os;
    const std::string lead = label + " = ";
    const std::string pad(lead.size(), ' ');
    bool first = true;
    for (const auto& g : order) {
        const std::string name = to_string(g);
        os << (first ? lead : pad) << name << std::string(width - name.size() + 3, ' ') << "for i = ";
        const auto& degrees = by_group[g];
        for (std::size_t k = 0; k < degrees.size(); ++k) os << (k ? ", " : "") << degrees[k];
        os << '\n';
        first = false;
    }
    const bool complete = static_cast<int>(h.nonzero().size()) == h.top() + 1;
    if (!complete) os << (first ? lead : pad) << '0' << std::string(width + 2, ' ') << "otherwise\n";
    return os.str();
}

/// One-line rendering "[Z, Z_14, 0, Z]".
inline std::string to_string(const GradedGroup& h) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i <= h.top(); ++i) os << (i ? ", " : "") << to_string(h.at(i));
    os << ']';
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const GradedGroup& h) { return os << to_string(h); }

}  // namespace chiral
