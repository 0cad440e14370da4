#pragma once

// Random well-formed construction expressions of a requested dimension.

#include <random>
#include <vector>

#include "chiral/expr.hpp"

namespace testing_support {

using chiral::Expr;
using chiral::Int;

class RandomExpr {
public:
    explicit RandomExpr(std::uint64_t seed) : rng_(seed) {}

    /// Expression of dimension `dim` (>= 1) with tree depth at most `depth`.
    Expr of_dim(int dim, int depth) {
        if (depth <= 0) return leaf(dim);
        std::vector<int> choices{0, 1, 2, 3};  // leaf, spin, csum, prod
        const int pick = choices[uniform(0, 3)];
        if (pick == 1 && dim >= 3) {
            const int r = uniform(1, dim - 2);
            return Expr::spin(r, of_dim(dim - r, depth - 1));
        }
        if (pick == 2 && dim >= 3) return Expr::csum(of_dim(dim, depth - 1), of_dim(dim, depth - 1));
        if (pick == 3 && dim >= 2) {
            const int a = uniform(1, dim - 1);
            return Expr::prod(of_dim(a, depth - 1), of_dim(dim - a, depth - 1));
        }
        return leaf(dim);
    }

    /// Random dimension in [lo, hi] and a random expression of that dimension.
    Expr any(int lo, int hi, int depth) { return of_dim(uniform(lo, hi), depth); }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }

    std::mt19937_64& engine() { return rng_; }

private:
    Expr leaf(int dim) {
        std::vector<Expr> options{Expr::sphere(dim)};
        if (dim == 2) {
            options.push_back(Expr::surface(uniform(2, 4)));
            options.push_back(Expr::cp(1));
            options.push_back(Expr::prod(Expr::sphere(1), Expr::sphere(1)));
        }
        if (dim >= 4 && dim % 2 == 0) options.push_back(Expr::cp(dim / 2));
        if (dim >= 3 && dim % 2 == 1) options.push_back(Expr::lens(pick<Int>({2, 3, 4, 5, 6, 7, 9, 12}), dim));
        if (dim % 4 == 3) options.push_back(Expr::bundle((dim - 3) / 4, pick<Int>({1, -1, 2, 3, 5, 7, -11})));
        if (dim == 3) {
            options.push_back(Expr::dehn_rhs(pick<Int>({2, 3, 5, 7, 11, 13})));
            options.push_back(Expr::dehn_rhs(pick<Int>({3, 7, 11, 19})));
            options.push_back(Expr::ihs3());
        }
        return pick(options);
    }

    std::mt19937_64 rng_;
};

}  // namespace testing_support
