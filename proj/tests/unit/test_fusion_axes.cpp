#include <gtest/gtest.h>

#include <random>

#include "axial/axis.hpp"
#include "axial/error.hpp"
#include "axial/fusion.hpp"
#include "axial/matsuo.hpp"
#include "fixtures.hpp"

using namespace axial;
using fixtures::r;
using fixtures::v;

namespace {

const FusionLaw kNS = FusionLaw::monster(r(1, 4), r(1, 32));

Vec random_in(const Subspace& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-5, 5);
  Vec x = zero_vec(s.ambient());
  for (const auto& b : s.basis()) axpy(x, Rat(c(rng)), b);
  return x;
}

}  // namespace

TEST(FusionLaw, ValidatesTables) {
  using T = std::vector<std::vector<std::vector<Rat>>>;
  // missing 1
  EXPECT_THROW(FusionLaw({Rat(0)}, T{{{}}}), ValidationError);
  // 1 * 0 must be empty
  EXPECT_THROW(FusionLaw({Rat(1), Rat(0)}, T{{{Rat(1)}, {Rat(0)}}, {{Rat(0)}, {Rat(0)}}}), ValidationError);
  // asymmetric
  EXPECT_THROW(FusionLaw({Rat(1), Rat(0)}, T{{{Rat(1)}, {}}, {{Rat(1)}, {Rat(0)}}}), ValidationError);
  EXPECT_THROW(FusionLaw::jordan(Rat(1)), PreconditionError);
}

TEST(FusionLaw, StandardTables) {
  EXPECT_EQ(kNS.values(), (std::vector<Rat>{1, 0, r(1, 4), r(1, 32)}));
  EXPECT_EQ(kNS.star_values(r(1, 32), r(1, 32)), (std::vector<Rat>{1, 0, r(1, 4)}));
  EXPECT_EQ(kNS.star_values(r(1, 4), r(1, 4)), (std::vector<Rat>{1, 0}));
  EXPECT_EQ(kNS.star_values(0, r(1, 4)), (std::vector<Rat>{r(1, 4)}));
  EXPECT_EQ(kNS.star_values(r(1, 4), r(1, 32)), (std::vector<Rat>{r(1, 32)}));
  EXPECT_TRUE(is_seress(kNS));
  EXPECT_TRUE(is_seress(FusionLaw::jordan(r(1, 4))));
  EXPECT_EQ(kNS.name(), "m:1/4:1/32");
}

TEST(FusionLaw, Gradings) {
  EXPECT_EQ(c2_grading(kNS).minus, (std::vector<Rat>{r(1, 32)}));
  EXPECT_EQ(c2_grading(FusionLaw::jordan(r(1, 4))).minus, (std::vector<Rat>{r(1, 4)}));
  EXPECT_FALSE(c2_grading(FusionLaw::associative()).nontrivial());
}

TEST(CheckAxis, TwoBPair) {
  const Algebra a = fixtures::two_b();
  EXPECT_TRUE(check_axis(a, v({1, 0}), kNS));
  EXPECT_TRUE(check_axis(a, v({0, 1}), kNS));
  EXPECT_EQ(check_axis(a, v({1, 1}), kNS).reason, AxisFailure::not_primitive);
  EXPECT_TRUE(check_axis(a, v({1, 1}), kNS, false));
  EXPECT_EQ(check_axis(a, v({0, 0}), kNS).reason, AxisFailure::zero_vector);
  EXPECT_EQ(check_axis(a, v({2, 0}), kNS).reason, AxisFailure::not_idempotent);
  EXPECT_TRUE(check_axis(a, v({1, 0}), kNS).axis->tau_trivial());
}

TEST(CheckAxis, NonSemisimpleAndBadSpectrum) {
  // e with e n = n/2 is fine for J(1/2); a nilpotent Jordan block is not.
  AlgebraBuilder b(2);
  b.set_constant(0, 0, 0, Rat(1)).set_constant(0, 1, 1, r(1, 2));
  const Algebra a = b.build();
  EXPECT_TRUE(check_axis(a, v({1, 0}), FusionLaw::jordan(r(1, 2))));
  EXPECT_EQ(check_axis(a, v({1, 0}), kNS).reason, AxisFailure::bad_spectrum);

  AlgebraBuilder c(3);
  c.set_constant(0, 0, 0, Rat(1)).set_constant(0, 1, 1, r(1, 2)).set_constant(0, 2, 2, r(1, 2));
  c.set_constant(0, 2, 1, Rat(1));
  EXPECT_EQ(check_axis(c.build(), v({1, 0, 0}), FusionLaw::jordan(r(1, 2))).reason, AxisFailure::not_semisimple);
}

TEST(CheckAxis, FusionViolation) {
  // e w = w/4 with w^2 = w breaks 1/4 * 1/4 inside {1, 0}.
  AlgebraBuilder b(2);
  b.set_constant(0, 0, 0, Rat(1)).set_constant(0, 1, 1, r(1, 4)).set_constant(1, 1, 1, Rat(1));
  EXPECT_EQ(check_axis(b.build(), v({1, 0}), FusionLaw::jordan(r(1, 4))).reason, AxisFailure::fusion_violation);
}

TEST(CheckAxis, MatsuoS3AllTranspositions) {
  for (const Rat& eta : {r(1, 4), r(2)}) {
    const Algebra m = matsuo_algebra(fixtures::symmetric_group_data(3), eta);
    for (std::size_t i = 0; i < 3; ++i) {
      AxisCheck c = check_axis(m, unit_vec(3, i), FusionLaw::jordan(eta));
      ASSERT_TRUE(c) << to_string(c.reason);
      EXPECT_TRUE(c.axis->primitive);
      EXPECT_EQ(c.axis->eigenspace(eta).dim(), 1u);
    }
  }
}

TEST(CheckAxis, SeressAssociationProperty) {
  std::mt19937_64 rng(42);
  const Algebra m = matsuo_algebra(fixtures::symmetric_group_data(3), r(1, 4));
  for (std::size_t i = 0; i < 3; ++i) {
    Axis a = *check_axis(m, unit_vec(3, i), FusionLaw::jordan(r(1, 4))).axis;
    const Subspace even = sum(a.eigenspace(1), a.eigenspace(0));
    for (int t = 0; t < 100; ++t) {
      const Vec w = random_in(even, rng);
      const Vec x = random_in(Subspace::full(3), rng);
      EXPECT_TRUE(associates(m, a.vector, x, w));
    }
  }
}

TEST(CheckAxis, Q2MixedLaws) {
  const Algebra q2 = fixtures::q2_table();
  AxisCheck s1 = check_axis(q2, unit_vec(4, 0), FusionLaw::jordan(r(1, 4)));
  ASSERT_TRUE(s1);
  AxisCheck d1 = check_axis(q2, unit_vec(4, 2), FusionLaw::monster(r(1, 2), r(1, 4)));
  ASSERT_TRUE(d1) << to_string(d1.reason) << " " << d1.detail;
  EXPECT_FALSE(check_axis(q2, unit_vec(4, 2), FusionLaw::jordan(r(1, 4))));
  // tau of a single axis swaps the double axes
  EXPECT_EQ(s1.axis->miyamoto * unit_vec(4, 2), unit_vec(4, 3));
  // the double axes have equal taus
  AxisCheck d2 = check_axis(q2, unit_vec(4, 3), FusionLaw::monster(r(1, 2), r(1, 4)));
  EXPECT_EQ(d1.axis->miyamoto, d2.axis->miyamoto);
  EXPECT_TRUE(is_automorphism(q2, s1.axis->miyamoto));
  EXPECT_TRUE(is_automorphism(q2, d1.axis->miyamoto));
}

TEST(CheckAxis, AdTraceOfSingleAxis) {
  EXPECT_EQ(ad_matrix(fixtures::q2_table(), unit_vec(4, 0)).trace(), r(5, 4));
}

TEST(InferLaw, Q2Axes) {
  const Algebra q2 = fixtures::q2_table();
  auto ls = infer_fusion_law(q2, unit_vec(4, 0));
  ASSERT_TRUE(ls);
  EXPECT_EQ(ls->values(), (std::vector<Rat>{1, 0, r(1, 4)}));
  auto ld = infer_fusion_law(q2, unit_vec(4, 2));
  ASSERT_TRUE(ld);
  EXPECT_EQ(ld->values(), (std::vector<Rat>{1, 0, r(1, 4), r(1, 2)}));
  EXPECT_TRUE(check_axis(q2, unit_vec(4, 2), *ld));
  EXPECT_FALSE(infer_fusion_law(q2, v({1, 1, 0, 0}) /* idempotent */) == std::nullopt);
  EXPECT_FALSE(infer_fusion_law(q2, v({2, 0, 0, 0})));
}

TEST(Miyamoto, TauIsInvolutiveAutomorphism) {
  const Algebra m = matsuo_algebra(fixtures::symmetric_group_data(4), r(1, 4));
  for (std::size_t i = 0; i < 6; ++i) {
    Axis a = *check_axis(m, unit_vec(6, i), FusionLaw::jordan(r(1, 4))).axis;
    const Mat& t = miyamoto_involution(a);
    EXPECT_EQ(t * t, Mat::identity(6));
    EXPECT_TRUE(is_automorphism(m, t));
  }
}

TEST(Miyamoto, SigmaOfJordanAxisInMonsterLaw) {
  const Algebra a = fixtures::triple_sign_algebra(r(1, 32), r(1, 4), Rat(0));
  AxisCheck u = check_axis(a, unit_vec(7, 3), kNS);
  ASSERT_TRUE(u) << to_string(u.reason) << " " << u.detail;
  EXPECT_TRUE(u.axis->tau_trivial());
  ASSERT_TRUE(u.axis->sigma);
  EXPECT_EQ(*u.axis->sigma, Mat::diagonal(v({1, 1, 1, 1, -1, -1, -1})));
  EXPECT_TRUE(is_automorphism(a, *u.axis->sigma));
}
