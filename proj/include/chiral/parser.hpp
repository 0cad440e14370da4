#pragma once

/**
 * @file parser.hpp
 * @brief Recursive-descent parser for the construction DSL.
 *
 *     expr := "S" "(" nat ")" | "CP" "(" nat ")" | "Sigma" "(" nat ")"
 *           | "L" "(" nat "," nat ")" | "N" "(" nat ")" | "IHS3"
 *           | "E" "(" nat "," int ")"
 *           | "spin" "(" nat "," expr ")"
 *           | "csum" "(" expr "," expr ")" | "prod" "(" expr "," expr ")"
 *
 * Whitespace is insignificant. Generator arguments are checked against the
 * generator preconditions while parsing, so `N(4)` or `spin(0, S(3))` fail
 * with a located semantic error rather than at evaluation time.
 */

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chiral/expr.hpp"
#include "chiral/residue.hpp"

namespace chiral {

class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, Semantic };

    ParseError(Kind kind, int line, int column, const std::string& message)
        : std::runtime_error(format(kind, line, column, message)), kind_(kind), line_(line), column_(column) {}

    Kind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(Kind kind, int line, int column, const std::string& message) {
        return std::string(kind == Kind::Syntax ? "syntax error" : "semantic error") + " at line " +
               std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    Kind kind_;
    int line_;
    int column_;
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse_all() {
        Expr e = expr();
        skip_ws();
        if (pos_ != text_.size()) syntax("expected end of input, found '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    struct Loc {
        int line;
        int column;
    };

    Expr expr() {
        skip_ws();
        const Loc at = loc();
        const std::string word = identifier();
        if (word.empty()) {
            syntax(pos_ < text_.size() ? "expected an expression, found '" + std::string(1, text_[pos_]) + "'"
                                       : "expected an expression, found end of input",
                   expected_heads());
        }

        if (word == "IHS3") return Expr::ihs3();
        if (word == "S") return unary(at, word, [&](Int n, Loc l) {
            semantic_if(n < 1, l, "sphere dimension must be >= 1, got " + std::to_string(n));
            return Expr::sphere(n);
        });
        if (word == "CP") return unary(at, word, [&](Int n, Loc l) {
            semantic_if(n < 1, l, "CP(n) needs n >= 1, got " + std::to_string(n));
            return Expr::cp(n);
        });
        if (word == "Sigma") return unary(at, word, [&](Int g, Loc l) {
            semantic_if(g < 2, l, "surface genus must be >= 2, got " + std::to_string(g));
            return Expr::surface(g);
        });
        if (word == "N") return unary(at, word, [&](Int p, Loc l) {
            semantic_if(!is_prime(p), l, "N(p) needs a prime p, got " + std::to_string(p));
            return Expr::dehn_rhs(p);
        });
        if (word == "L") {
            expect('(');
            const Loc lp = loc();
            const Int p = nat();
            expect(',');
            const Loc ld = loc();
            const Int dim = nat();
            expect(')');
            semantic_if(p < 2, lp, "lens order must be >= 2, got " + std::to_string(p));
            semantic_if(dim < 3 || dim % 2 == 0, ld,
                        "lens dimension must be odd and >= 3, got " + std::to_string(dim));
            return Expr::lens(p, dim);
        }
        if (word == "E") {
            expect('(');
            const Int m = nat();
            expect(',');
            const Loc ld = loc();
            const Int d = integer();
            expect(')');
            semantic_if(d == 0, ld, "Euler multiple d must be nonzero");
            return Expr::bundle(m, d);
        }
        if (word == "spin") {
            expect('(');
            const Loc lr = loc();
            const Int r = nat();
            semantic_if(r < 1, lr, "spin radius must be >= 1, got " + std::to_string(r));
            expect(',');
            Expr child = expr();
            expect(')');
            return Expr::spin(r, std::move(child));
        }
        if (word == "csum" || word == "prod") {
            expect('(');
            Expr a = expr();
            expect(',');
            Expr b = expr();
            expect(')');
            return word == "csum" ? Expr::csum(std::move(a), std::move(b)) : Expr::prod(std::move(a), std::move(b));
        }
        throw ParseError(ParseError::Kind::Syntax, at.line, at.column,
                         "unknown constructor '" + word + "'; expected one of " + expected_heads());
    }

    template <class Build>
    Expr unary(Loc, const std::string&, Build build) {
        expect('(');
        const Loc l = loc();
        const Int n = nat();
        expect(')');
        return build(n, l);
    }

    static std::string expected_heads() { return "S, CP, Sigma, L, N, IHS3, E, spin, csum, prod"; }

    std::string identifier() {
        const std::size_t start = pos_;
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) advance();
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    Int nat() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            syntax("expected a natural number", "a decimal integer");
        }
        return digits(false);
    }

    Int integer() {
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            advance();
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            syntax("expected an integer", "a decimal integer");
        }
        return digits(negative);
    }

    Int digits(bool negative) {
        const Loc at = loc();
        Int v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const int digit = text_[pos_] - '0';
            if (v > (std::numeric_limits<Int>::max() - digit) / 10) {
                throw ParseError(ParseError::Kind::Syntax, at.line, at.column, "integer literal out of range");
            }
            v = v * 10 + digit;
            advance();
        }
        return negative ? -v : v;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size()) syntax("unexpected end of input", std::string("'") + c + "'");
        if (text_[pos_] != c) {
            syntax("unexpected '" + std::string(1, text_[pos_]) + "'", std::string("'") + c + "'");
        }
        advance();
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    Loc loc() {
        skip_ws();
        return {line_, column_};
    }

    [[noreturn]] void syntax(const std::string& what, const std::string& expected = {}) {
        throw ParseError(ParseError::Kind::Syntax, line_, column_,
                         expected.empty() ? what : what + "; expected " + expected);
    }

    static void semantic_if(bool bad, Loc l, const std::string& what) {
        if (bad) throw ParseError(ParseError::Kind::Semantic, l.line, l.column, what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

}  // namespace detail

inline Expr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

}  // namespace chiral
