#include <gtest/gtest.h>

#include "chiral/graded_group.hpp"

using chiral::AbGroup;
using chiral::GradedGroup;

namespace {

const AbGroup Z = AbGroup::integers();
const AbGroup O = AbGroup::trivial();
AbGroup C(chiral::Int n) { return AbGroup::cyclic(n); }

}  // namespace

TEST(GradedGroup, StorageIsSparse) {
    GradedGroup h(5);
    h.set(2, O);
    h.set(3, C(4));
    EXPECT_EQ(h.nonzero().size(), 1u);
    EXPECT_EQ(h.at(3), C(4));
    EXPECT_EQ(h.at(0), O);
    h.add(3, C(4));
    EXPECT_EQ(h.at(3), AbGroup::cyclic_power(4, 2));
    EXPECT_THROW(h.set(6, Z), std::out_of_range);
    EXPECT_EQ(GradedGroup::from_list({Z, O, Z}), GradedGroup::from_list({Z, O, Z}));
}

TEST(GradedGroup, ShiftAndReduced) {
    const GradedGroup h = GradedGroup::from_list({Z, C(14), O, Z});
    const GradedGroup r = reduced(h);
    EXPECT_EQ(r.at(0), O);
    EXPECT_EQ(r.at(1), C(14));
    const GradedGroup s = shift(r, 2, 5);
    EXPECT_EQ(s.at(3), C(14));
    EXPECT_EQ(s.at(5), Z);
    EXPECT_EQ(s.top(), 5);
}

TEST(GradedGroup, EulerCharacteristic) {
    EXPECT_EQ(euler_characteristic(GradedGroup::from_list({Z, O, Z})), 2);
    EXPECT_EQ(euler_characteristic(GradedGroup::from_list({Z, AbGroup::free(4), Z})), -2);
    EXPECT_EQ(euler_characteristic(GradedGroup::from_list({Z, C(14), O, Z})), 0);
}

TEST(GradedGroup, DualityAcceptsManifoldLikeHomology) {
    EXPECT_TRUE(check_poincare_duality(GradedGroup::from_list({Z, C(14), O, Z}), 3));
    EXPECT_TRUE(check_poincare_duality(GradedGroup::from_list({Z, C(3), O, C(3), O, Z}), 5));
}

TEST(GradedGroup, DualityRejectsAndNamesDegree) {
    const auto bad_torsion = check_poincare_duality(GradedGroup::from_list({Z, O, C(5), Z}), 3);
    EXPECT_FALSE(bad_torsion.ok);
    EXPECT_FALSE(bad_torsion.message.empty());
    const auto bad_rank = check_poincare_duality(GradedGroup::from_list({Z, Z, O, O, Z}), 4);
    EXPECT_FALSE(bad_rank.ok);
    EXPECT_TRUE(bad_rank.degree == 1 || bad_rank.degree == 3);
}

TEST(GradedGroup, UniversalCoefficients) {
    const GradedGroup h = GradedGroup::from_list({Z, C(14), O, Z});
    const GradedGroup c = cohomology_from_homology(h, 3);
    EXPECT_EQ(c, GradedGroup::from_list({Z, O, C(14), Z}));
    EXPECT_EQ(homology_from_cohomology(c, 3), h);
    const GradedGroup mixed = GradedGroup::from_list({Z, AbGroup::normalize({2}, 1), C(6), AbGroup::normalize({2}, 1), Z});
    EXPECT_EQ(homology_from_cohomology(cohomology_from_homology(mixed, 4), 4), mixed);
}

TEST(GradedGroup, CohomologyReaderRejectsLowTorsion) {
    GradedGroup c(3);
    c.set(0, Z);
    c.set(1, C(2));
    c.set(3, Z);
    EXPECT_THROW(homology_from_cohomology(c, 3), std::invalid_argument);
}

TEST(GradedGroup, Rendering) {
    const GradedGroup h = GradedGroup::from_list({Z, C(14), O, Z});
    EXPECT_EQ(to_string(h), "[Z, Z_14, 0, Z]");
    const std::string cases = render_cases(h, "H_i");
    EXPECT_NE(cases.find("Z_14"), std::string::npos);
    EXPECT_NE(cases.find("0"), std::string::npos);
}
