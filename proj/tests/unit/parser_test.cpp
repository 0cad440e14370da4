#include <gtest/gtest.h>

#include "chiral/parser.hpp"
#include "support/random_expr.hpp"

using chiral::Expr;
using chiral::ParseError;
using chiral::parse;

namespace {

ParseError error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no error for " << text;
    return ParseError(ParseError::Kind::Syntax, 0, 0, "");
}

}  // namespace

TEST(Parser, Leaves) {
    EXPECT_EQ(parse("S(3)"), Expr::sphere(3));
    EXPECT_EQ(parse("CP(2)"), Expr::cp(2));
    EXPECT_EQ(parse("Sigma(4)"), Expr::surface(4));
    EXPECT_EQ(parse("L(5, 7)"), Expr::lens(5, 7));
    EXPECT_EQ(parse("N(7)"), Expr::dehn_rhs(7));
    EXPECT_EQ(parse("IHS3"), Expr::ihs3());
    EXPECT_EQ(parse("E(1, -7)"), Expr::bundle(1, -7));
}

TEST(Parser, NestedAndWhitespace) {
    const Expr e = parse("  csum( E(1,7) ,\n  spin(4, N(7)) )\n");
    EXPECT_EQ(e, Expr::csum(Expr::bundle(1, 7), Expr::spin(4, Expr::dehn_rhs(7))));
    EXPECT_EQ(to_string(e), "csum(E(1, 7), spin(4, N(7)))");
}

TEST(Parser, RoundTripsRandomExpressions) {
    testing_support::RandomExpr gen(99);
    for (int i = 0; i < 300; ++i) {
        const Expr e = gen.any(1, 11, 5);
        EXPECT_EQ(parse(to_string(e)), e) << to_string(e);
    }
}

TEST(Parser, SyntaxErrorsCarryPosition) {
    const auto e = error_of("csum(S(3),\n  S(3)");
    EXPECT_EQ(e.kind(), ParseError::Kind::Syntax);
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 7);

    const auto unknown = error_of("T(3)");
    EXPECT_EQ(unknown.kind(), ParseError::Kind::Syntax);
    EXPECT_NE(std::string(unknown.what()).find("csum"), std::string::npos);

    EXPECT_EQ(error_of("S(3) S(4)").kind(), ParseError::Kind::Syntax);
    EXPECT_EQ(error_of("S(-3)").kind(), ParseError::Kind::Syntax);
    EXPECT_EQ(error_of("S(99999999999999999999)").kind(), ParseError::Kind::Syntax);
    EXPECT_EQ(error_of("").kind(), ParseError::Kind::Syntax);
}

TEST(Parser, SemanticErrors) {
    for (const char* text : {"spin(0, S(3))", "S(0)", "CP(0)", "Sigma(1)", "N(9)", "L(1, 3)", "L(3, 4)", "L(3, 1)",
                             "E(1, 0)"}) {
        EXPECT_EQ(error_of(text).kind(), ParseError::Kind::Semantic) << text;
    }
    const auto e = error_of("prod(S(2), N(15))");
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 14);
}
