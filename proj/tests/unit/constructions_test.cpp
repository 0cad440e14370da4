#include <gtest/gtest.h>

#include "chiral/constructions.hpp"
#include "support/oracles.hpp"

using namespace chiral;

namespace {

const AbGroup Z = AbGroup::integers();
const AbGroup O = AbGroup::trivial();
AbGroup C(Int n) { return AbGroup::cyclic(n); }

oracle::Grading to_grading(const GradedGroup& h) {
    oracle::Grading g;
    for (int i = 0; i <= h.top(); ++i) g.degrees.push_back({h.at(i).rank(), h.at(i).invariant_factors()});
    return g;
}

GradedGroup from_grading(const oracle::Grading& g) {
    GradedGroup h(static_cast<int>(g.degrees.size()) - 1);
    for (std::size_t i = 0; i < g.degrees.size(); ++i) {
        h.set(static_cast<int>(i), AbGroup::normalize(g.degrees[i].torsion, g.degrees[i].rank));
    }
    return h;
}

}  // namespace

TEST(Generators, Spheres) {
    const auto s = sphere(5);
    EXPECT_EQ(s.homology, GradedGroup::from_list({Z, O, O, O, O, Z}));
    EXPECT_EQ(s.connectivity, 4);
    EXPECT_TRUE(s.pi1.is_trivial());
    EXPECT_TRUE(s.has_fact(FactKind::KnownDegreeSet));
    EXPECT_TRUE(sphere(1).pi1.kind() == Pi1Kind::FreeAbelian);
    EXPECT_THROW(sphere(0), PreconditionError);
}

TEST(Generators, ComplexProjective) {
    const auto c = complex_projective(3);
    EXPECT_EQ(c.dim, 6);
    EXPECT_EQ(c.homology, GradedGroup::from_list({Z, O, Z, O, Z, O, Z}));
    EXPECT_EQ(c.euler_characteristic(), 4);
    EXPECT_EQ(c.connectivity, 1);
    EXPECT_THROW(complex_projective(0), PreconditionError);
}

TEST(Generators, Surfaces) {
    const auto s = surface(3);
    EXPECT_EQ(s.homology, GradedGroup::from_list({Z, AbGroup::free(6), Z}));
    EXPECT_EQ(s.euler_characteristic(), -4);
    EXPECT_TRUE(s.has_fact(FactKind::Hyperbolic));
    EXPECT_THROW(surface(1), PreconditionError);
}

TEST(Generators, LensSpaces) {
    const auto l = lens(7, 7);
    EXPECT_EQ(l.homology, GradedGroup::from_list({Z, C(7), O, C(7), O, C(7), O, Z}));
    EXPECT_EQ(l.cohomology(), GradedGroup::from_list({Z, O, C(7), O, C(7), O, C(7), Z}));
    EXPECT_EQ(l.pi1, Pi1Tag::finite_cyclic(7));
    EXPECT_THROW(lens(7, 6), PreconditionError);
    EXPECT_THROW(lens(1, 3), PreconditionError);
}

TEST(Generators, DehnFillings) {
    const auto a = dehn_rhs(7);
    const auto b = dehn_rhs(7);
    EXPECT_EQ(a.homology, GradedGroup::from_list({Z, C(14), O, Z}));
    EXPECT_EQ(a.pi1.kind(), Pi1Kind::HyperbolicThreeManifoldGroup);
    EXPECT_NE(a.pi1, b.pi1);  // every call is a fresh manifold
    EXPECT_TRUE(a.has_fact(FactKind::Hyperbolic));
    EXPECT_TRUE(a.has_fact(FactKind::OddOrderIsometryGroup));
    EXPECT_EQ(a.connectivity, 0);
    EXPECT_THROW(dehn_rhs(9), PreconditionError);
    EXPECT_EQ(ihs3().homology, GradedGroup::from_list({Z, O, O, Z}));
}

TEST(Generators, GysinBundles) {
    const auto e0 = bundle(0, 7);
    EXPECT_EQ(e0.homology, GradedGroup::from_list({Z, C(14), O, Z}));
    EXPECT_EQ(e0.pi1, Pi1Tag::finite_cyclic(14));
    const auto e2 = bundle(2, -1);
    EXPECT_EQ(e2.dim, 11);
    EXPECT_EQ(e2.homology.at(5), C(2));
    EXPECT_EQ(e2.cohomology().at(6), C(2));
    EXPECT_EQ(e2.homology.nonzero().size(), 3u);
    EXPECT_EQ(e2.connectivity, 4);
    EXPECT_THROW(bundle(1, 0), PreconditionError);
    EXPECT_THROW(bundle(-1, 3), PreconditionError);
}

TEST(Combinators, ConnectedSum) {
    const auto m = connected_sum(dehn_rhs(3), lens(5, 3));
    EXPECT_EQ(m.homology, GradedGroup::from_list({Z, AbGroup::normalize({6, 5}), O, Z}));
    EXPECT_EQ(m.pi1.kind(), Pi1Kind::FreeProduct);
    EXPECT_THROW(connected_sum(sphere(3), sphere(4)), PreconditionError);
    EXPECT_THROW(connected_sum(surface(2), surface(3)), PreconditionError);
}

TEST(Combinators, ProductMatchesExpandedKunneth) {
    const auto n = dehn_rhs(7);
    const auto e = bundle(1, 7);
    const auto m = product(n, e);
    EXPECT_EQ(m.dim, 10);
    const GradedGroup expected = from_grading(oracle::kunneth(to_grading(n.homology), to_grading(e.homology)));
    EXPECT_EQ(m.homology, expected);
    // H_4 gets Z_14 (x) Z_14 from degrees (1, 3); the Tor term of that pair lands in H_5
    EXPECT_EQ(m.homology.at(4), C(14));
    EXPECT_EQ(m.homology.at(5), C(14));
    EXPECT_EQ(m.homology.at(3), AbGroup::normalize({14}, 1));
    EXPECT_TRUE(check_poincare_duality(m.homology, 10));
    EXPECT_EQ(m.pi1, n.pi1);  // the bundle factor is simply connected
    EXPECT_EQ(product(n, lens(3, 3)).pi1.kind(), Pi1Kind::DirectProduct);
}

TEST(Combinators, ProductWithPointlikeFactorsFlattens) {
    const auto m = product(sphere(2), product(sphere(3), dehn_rhs(3)));
    EXPECT_EQ(m.pi1.kind(), Pi1Kind::HyperbolicThreeManifoldGroup);
    EXPECT_EQ(m.homology.at(5), AbGroup::normalize({}, 2));
}

TEST(Combinators, SpinHomology) {
    const auto n = dehn_rhs(7);
    const auto once = spin(1, n);
    EXPECT_EQ(once.homology, GradedGroup::from_list({Z, C(14), C(14), O, Z}));
    EXPECT_EQ(once.pi1, n.pi1);
    const auto twice = spin(1, once);
    EXPECT_EQ(twice.homology, GradedGroup::from_list({Z, C(14), AbGroup::cyclic_power(14, 2), C(14), O, Z}));
    EXPECT_EQ(iterated_spin({1, 1}, n).homology, twice.homology);
    const auto s4 = spin(4, n);
    EXPECT_EQ(s4.homology, GradedGroup::from_list({Z, C(14), O, O, O, C(14), O, Z}));
    EXPECT_THROW(spin(0, n), PreconditionError);
}

TEST(Combinators, SpinOfSurfaceUsesConnectedSumForm) {
    const auto s = spin(2, surface(2));
    EXPECT_EQ(s.dim, 4);
    EXPECT_EQ(s.homology, GradedGroup::from_list({Z, AbGroup::free(4), O, AbGroup::free(4), Z}));
    EXPECT_FALSE(s.has_fact(FactKind::Hyperbolic));
}

TEST(Combinators, SpinOfOneManifoldIsRejected) {
    EXPECT_THROW(spin(1, sphere(1)), PreconditionError);
    EXPECT_THROW(iterated_spin({1, 1}, surface(2)), PreconditionError);
}

TEST(Pipelines, SmallCases) {
    const auto main0 = pipeline_main(0, 7);
    EXPECT_EQ(main0.dim, 3);
    EXPECT_EQ(main0.homology, GradedGroup::from_list({Z, C(14), O, Z}));
    const auto main1 = pipeline_main(1, 7);
    EXPECT_EQ(main1.homology, GradedGroup::from_list({Z, C(14), O, C(14), O, C(14), O, Z}));
    const auto build = build_main2(1, 3);
    EXPECT_EQ(build.manifold.homology, GradedGroup::from_list({Z, O, O, C(6), O, O, O, Z}));
    EXPECT_EQ(build.manifold.pi1, build.hyperbolic_factor.pi1);
    EXPECT_THROW(pipeline_main(1, 5), PreconditionError);
    EXPECT_THROW(pipeline_main(-1, 7), PreconditionError);
    EXPECT_THROW(pipeline_main2(1, 4), PreconditionError);
}

TEST(Pipelines, EvaluateAgreesWithDirectCalls) {
    const auto e = evaluate(Expr::csum(Expr::bundle(1, 7), Expr::spin(4, Expr::dehn_rhs(7))));
    EXPECT_EQ(e.homology, pipeline_main(1, 7).homology);
    EXPECT_EQ(to_string(e.expr), "csum(E(1, 7), spin(4, N(7)))");
}
