#include <gtest/gtest.h>

#include "support/structural.hpp"

using namespace testing_support;

TEST(Properties, RandomCorpusSatisfiesStructuralInvariants) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const CorpusStats stats = run_structural_corpus(seed, 300);
        EXPECT_EQ(stats.expressions, 300);
        EXPECT_GT(stats.order_checks, 50);
        EXPECT_GT(stats.distributivity_checks, 50);
        for (const auto& f : stats.failures) ADD_FAILURE() << "seed " << seed << ": " << f;
    }
}

TEST(Properties, DimensionsAreAsRequested) {
    RandomExpr gen(5);
    for (int i = 0; i < 500; ++i) {
        const int dim = gen.uniform(1, 12);
        EXPECT_EQ(evaluate(gen.of_dim(dim, 5)).dim, dim);
    }
}

TEST(Properties, ConnectedSumWithSphereIsIdentityOnHomology) {
    RandomExpr gen(11);
    for (int i = 0; i < 200; ++i) {
        const ManifoldDescriptor m = evaluate(gen.any(3, 10, 3));
        EXPECT_EQ(connected_sum(m, sphere(m.dim)).homology, m.homology) << to_string(m.expr);
    }
}

TEST(Properties, ProductEulerCharacteristicIsMultiplicative) {
    RandomExpr gen(13);
    for (int i = 0; i < 200; ++i) {
        const ManifoldDescriptor a = evaluate(gen.any(1, 6, 3));
        const ManifoldDescriptor b = evaluate(gen.any(1, 6, 3));
        EXPECT_EQ(product(a, b).euler_characteristic(), a.euler_characteristic() * b.euler_characteristic());
    }
}

TEST(Properties, SpinEulerCharacteristic) {
    // chi(sigma_r M) = chi(M) - (-1)^n + (-1)^r (chi(M) - 1)
    RandomExpr gen(17);
    for (int i = 0; i < 200; ++i) {
        const ManifoldDescriptor m = evaluate(gen.any(2, 8, 3));
        const Int r = gen.uniform(1, 5);
        const Int chi = m.euler_characteristic();
        const Int expected = chi - (m.dim % 2 ? -1 : 1) + (r % 2 ? -1 : 1) * (chi - 1);
        EXPECT_EQ(spin(r, m).euler_characteristic(), expected) << to_string(m.expr) << " r=" << r;
    }
}

TEST(Properties, SpinPreservesFundamentalGroup) {
    RandomExpr gen(19);
    for (int i = 0; i < 200; ++i) {
        const ManifoldDescriptor m = evaluate(gen.any(3, 8, 3));
        EXPECT_EQ(spin(gen.uniform(1, 4), m).pi1, m.pi1) << to_string(m.expr);
    }
}
