#pragma once

/**
 * @file expr.hpp
 * @brief Construction expressions: the syntax tree of the manifold DSL.
 *
 * Leaves are generators, inner nodes are the three combinators. Nodes are
 * immutable and shared; copying an Expr is cheap.
 *
 *     S(n)  CP(n)  Sigma(g)  L(p, dim)  N(p)  IHS3  E(m, d)
 *     spin(r, e)  csum(a, b)  prod(a, b)
 */

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiral/detail/checked.hpp"

namespace chiral {

enum class ExprKind {
    Sphere,    // S(n)
    CP,        // CP(n)
    Surface,   // Sigma(g)
    Lens,      // L(p, dim)
    DehnRHS,   // N(p)
    IHS3,      // IHS3
    Bundle,    // E(m, d)
    Spin,      // spin(r, child)
    CSum,      // csum(a, b)
    Prod,      // prod(a, b)
};

class Expr {
public:
    static Expr sphere(Int n) { return leaf(ExprKind::Sphere, {n}); }
    static Expr cp(Int n) { return leaf(ExprKind::CP, {n}); }
    static Expr surface(Int genus) { return leaf(ExprKind::Surface, {genus}); }
    static Expr lens(Int p, Int dim) { return leaf(ExprKind::Lens, {p, dim}); }
    static Expr dehn_rhs(Int p) { return leaf(ExprKind::DehnRHS, {p}); }
    static Expr ihs3() { return leaf(ExprKind::IHS3, {}); }
    static Expr bundle(Int m, Int d) { return leaf(ExprKind::Bundle, {m, d}); }
    static Expr spin(Int r, Expr child) { return node(ExprKind::Spin, {r}, {std::move(child)}); }
    static Expr csum(Expr a, Expr b) { return node(ExprKind::CSum, {}, {std::move(a), std::move(b)}); }
    static Expr prod(Expr a, Expr b) { return node(ExprKind::Prod, {}, {std::move(a), std::move(b)}); }

    ExprKind kind() const { return n_->kind; }
    const std::vector<Int>& args() const { return n_->args; }
    Int arg(std::size_t i) const { return n_->args.at(i); }
    const std::vector<Expr>& children() const { return n_->children; }
    const Expr& child(std::size_t i) const { return n_->children.at(i); }

    bool is_leaf() const { return n_->children.empty(); }

    friend bool operator==(const Expr& a, const Expr& b) {
        if (a.n_ == b.n_) return true;
        return a.kind() == b.kind() && a.args() == b.args() && a.children() == b.children();
    }

private:
    struct Node {
        ExprKind kind;
        std::vector<Int> args;
        std::vector<Expr> children;
    };

    explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

    static Expr leaf(ExprKind k, std::vector<Int> args) { return node(k, std::move(args), {}); }
    static Expr node(ExprKind k, std::vector<Int> args, std::vector<Expr> children) {
        return Expr(std::make_shared<const Node>(Node{k, std::move(args), std::move(children)}));
    }

    std::shared_ptr<const Node> n_;
};

inline const char* keyword(ExprKind k) {
    switch (k) {
        case ExprKind::Sphere: return "S";
        case ExprKind::CP: return "CP";
        case ExprKind::Surface: return "Sigma";
        case ExprKind::Lens: return "L";
        case ExprKind::DehnRHS: return "N";
        case ExprKind::IHS3: return "IHS3";
        case ExprKind::Bundle: return "E";
        case ExprKind::Spin: return "spin";
        case ExprKind::CSum: return "csum";
        case ExprKind::Prod: return "prod";
    }
    return "?";
}

/// Canonical DSL text; parse(to_string(e)) == e.
inline std::string to_string(const Expr& e) {
    std::string out = keyword(e.kind());
    if (e.kind() == ExprKind::IHS3) return out;
    out += '(';
    bool first = true;
    for (Int a : e.args()) {
        if (!first) out += ", ";
        out += std::to_string(a);
        first = false;
    }
    for (const Expr& c : e.children()) {
        if (!first) out += ", ";
        out += to_string(c);
        first = false;
    }
    out += ')';
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << to_string(e); }

}  // namespace chiral
