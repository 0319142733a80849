#include <gtest/gtest.h>

#include <random>

#include "axial/algebra.hpp"
#include "axial/axis.hpp"
#include "axial/error.hpp"
#include "axial/matsuo.hpp"
#include "fixtures.hpp"

using namespace axial;
using fixtures::r;
using fixtures::v;

namespace {

Permutation perm(const char* s, std::size_t n) { return Permutation::parse_cycles(s, n); }

void expect_same_constants(const Algebra& a, const Algebra& b) {
  ASSERT_EQ(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) EXPECT_EQ(a.basis_product(i, j), b.basis_product(i, j)) << i << "," << j;
}

}  // namespace

TEST(Permutations, CyclesAndConjugation) {
  const Permutation p = perm("(1,2,3)", 4), t = perm("(1,2)", 4);
  EXPECT_EQ(p.order(), 3u);
  EXPECT_EQ(p.to_string(), "(1,2,3)");
  EXPECT_EQ(conjugate(t, p), perm("(2,3)", 4));
  EXPECT_EQ(generate_group({perm("(1,2)", 4), perm("(1,2,3,4)", 4)}).size(), 24u);
}

TEST(Transpositions, SymmetricGroupClasses) {
  EXPECT_EQ(fixtures::symmetric_group_data(3).D.size(), 3u);
  const auto d4 = fixtures::symmetric_group_data(4);
  EXPECT_EQ(d4.D.size(), 6u);
  // cd has order 2 or 3 for distinct transpositions
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (i != j) EXPECT_TRUE(d4.order[i][j] == 2 || d4.order[i][j] == 3);
}

TEST(Matsuo, S3ProductsAndForm) {
  const Rat eta = r(1, 4);
  const Algebra m = matsuo_algebra(fixtures::symmetric_group_data(3), eta);
  ASSERT_EQ(m.dim(), 3u);
  // c d = eta/2 (c + d - e) for |cd| = 3, e the third point of the line
  EXPECT_EQ(m.basis_product(0, 1), v({r(1, 8), r(1, 8), r(-1, 8)}));
  EXPECT_EQ(form_value(m, unit_vec(3, 0), unit_vec(3, 1)), r(1, 8));
  // unit 1/(1 + eta) * sum D for S3
  ASSERT_TRUE(m.unit());
  EXPECT_EQ(*m.unit(), v({r(4, 5), r(4, 5), r(4, 5)}));
}

TEST(Matsuo, S4UnitIsTwoThirdsSum) {
  const Algebra m = matsuo_algebra(fixtures::symmetric_group_data(4), r(1, 4));
  ASSERT_TRUE(m.unit());
  for (const Rat& x : *m.unit()) EXPECT_EQ(x, r(2, 3));
}

TEST(Flip, ReconstructsQ2EntryForEntry) {
  FlipResult f = double_axes_and_flip(fixtures::symmetric_group_data(4), r(1, 4), perm("(1,2)(3,4)", 4));
  const Algebra q2 = fixtures::q2_table();
  expect_same_constants(f.algebra, q2);
  ASSERT_TRUE(f.algebra.gram());
  EXPECT_EQ(*f.algebra.gram(), fixtures::q2_gram());
  EXPECT_EQ(determinant(*f.algebra.gram()), r(27, 8));
  ASSERT_TRUE(f.algebra.unit());
  EXPECT_EQ(*f.algebra.unit(), v({r(2, 3), r(2, 3), r(2, 3), r(2, 3)}));
  EXPECT_EQ(f.algebra.labels(), (std::vector<std::string>{"s1", "s2", "d1", "d2"}));
  EXPECT_EQ(f.generators[0].kind, FlipKind::single);
  EXPECT_EQ(f.generators[2].kind, FlipKind::double_axis);
}

TEST(Flip, TrivialSigmaGivesSingles) {
  FlipResult f = double_axes_and_flip(fixtures::symmetric_group_data(3), r(1, 4), Permutation::identity(3));
  EXPECT_EQ(f.algebra.dim(), 3u);
  expect_same_constants(f.algebra, f.matsuo);
}

TEST(Builder, RejectsBrokenFrobenius) {
  AlgebraBuilder b(2);
  b.set_constant(0, 0, 0, Rat(1)).set_constant(1, 1, 1, Rat(1));
  b.set_gram(Mat::from_rows({v({1, r(1, 2)}), v({r(1, 2), 1})}));
  try {
    b.build();
    FAIL() << "accepted a form that is not associative";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("Frobenius"), std::string::npos);
  }
}

TEST(Builder, RejectsConflictingConstants) {
  AlgebraBuilder b(2);
  b.set_constant(0, 1, 0, Rat(1));
  EXPECT_THROW(b.set_constant(1, 0, 0, Rat(2)), ValidationError);
}

TEST(Structure, UnitAndRadicalOfQ2) {
  const Algebra q2 = fixtures::q2_table();
  auto u = find_unit(q2);
  ASSERT_TRUE(u);
  EXPECT_EQ(*u, v({r(2, 3), r(2, 3), r(2, 3), r(2, 3)}));
  EXPECT_EQ(radical(q2).dim(), 0u);
}

TEST(Structure, RadicalOfDegenerateFormAndZeroForm) {
  // F e with a nilpotent n: e n = n/2, n n = 0; form (e,e) = 1, (n,n) = 0.
  AlgebraBuilder b(2);
  b.set_constant(0, 0, 0, Rat(1)).set_constant(0, 1, 1, r(1, 2));
  b.set_gram(Mat::from_rows({v({1, 0}), v({0, 0})}));
  const Algebra a = b.build();
  EXPECT_EQ(radical(a), Subspace::span({v({0, 1})}, 2));

  AlgebraBuilder z(1);
  z.set_gram(Mat(1, 1));
  EXPECT_THROW(radical(z.build()), PreconditionError);
}

TEST(Structure, NoUnitInZeroAlgebra) {
  AlgebraBuilder z(1);
  EXPECT_FALSE(find_unit(z.build()));
}

TEST(Structure, SubalgebraClosureAndConnectivity) {
  const Algebra q2 = fixtures::q2_table();
  EXPECT_EQ(subalgebra_closure(q2, {unit_vec(4, 0), unit_vec(4, 1)}).dim(), 2u);
  EXPECT_EQ(subalgebra_closure(q2, {unit_vec(4, 0), unit_vec(4, 2)}).dim(), 4u);
  auto comps = connectivity_graph(q2, {unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2), unit_vec(4, 3)});
  EXPECT_EQ(comps.size(), 1u);
  auto split = connectivity_graph(fixtures::two_b(), {unit_vec(2, 0), unit_vec(2, 1)});
  EXPECT_EQ(split.size(), 2u);
}

TEST(Structure, PerpOfSubalgebraIsModule) {
  // B-perp is a B-module for every subalgebra B of a Frobenius algebra
  const Algebra q2 = fixtures::q2_table();
  const Subspace b = subalgebra_closure(q2, {unit_vec(4, 0), unit_vec(4, 1)});
  EXPECT_TRUE(is_module(q2, b, perp_space(b, *q2.gram())));
}

TEST(Structure, SubalgebraUnitIsProjection) {
  const Algebra q2 = fixtures::q2_table();
  const Subspace b = subalgebra_closure(q2, {unit_vec(4, 0), unit_vec(4, 1)});
  auto u = unit_of_subalgebra(q2, b);
  ASSERT_TRUE(u);
  EXPECT_EQ(*u, v({1, 1, 0, 0}));
}

TEST(Structure, DirectSumAndFieldPower) {
  const Algebra s = direct_sum(fixtures::two_b(), field_power(1));
  EXPECT_EQ(s.dim(), 3u);
  EXPECT_EQ(*s.unit(), v({1, 1, 1}));
  EXPECT_EQ(s.basis_product(0, 2), zero_vec(3));
}

TEST(Structure, AutomorphismCheck) {
  const Algebra q2 = fixtures::q2_table();
  Mat swap_s = Mat::from_cols({unit_vec(4, 1), unit_vec(4, 0), unit_vec(4, 2), unit_vec(4, 3)}, 4);
  EXPECT_TRUE(is_automorphism(q2, swap_s));
  Mat bad = Mat::from_cols({unit_vec(4, 2), unit_vec(4, 1), unit_vec(4, 0), unit_vec(4, 3)}, 4);
  EXPECT_FALSE(is_automorphism(q2, bad));
}

TEST(Derivations, FinitenessCertificates) {
  EXPECT_EQ(derivation_space(fixtures::q2_table()).dim(), 0u);
  EXPECT_EQ(derivation_space(matsuo_algebra(fixtures::symmetric_group_data(3), r(1, 4))).dim(), 0u);
  EXPECT_EQ(derivation_space(matsuo_algebra(fixtures::symmetric_group_data(3), r(2))).dim(), 0u);
  AlgebraBuilder z(1);
  EXPECT_EQ(derivation_space(z.build()).dim(), 1u);
}

TEST(Derivations, EveryDerivationSatisfiesLeibniz) {
  // A 2-dim algebra with x^2 = y and y anything-zero has derivations.
  AlgebraBuilder b(2);
  b.set_constant(0, 0, 1, Rat(1));
  const Algebra a = b.build();
  const Subspace d = derivation_space(a);
  EXPECT_EQ(d.dim(), 2u);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const auto& flat : d.basis()) {
    const Mat D = unflatten(flat, 2);
    for (int t = 0; t < 10; ++t) {
      const Vec x = v({c(rng), c(rng)}), y = v({c(rng), c(rng)});
      EXPECT_EQ(D * product(a, x, y), add(product(a, D * x, y), product(a, x, D * y)));
    }
  }
}

TEST(Structure, FrobeniusPropertyOnRandomVectors) {
  const Algebra m = matsuo_algebra(fixtures::symmetric_group_data(4), r(1, 4));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int t = 0; t < 50; ++t) {
    Vec x(6), y(6), z(6);
    for (int i = 0; i < 6; ++i) x[i] = c(rng), y[i] = c(rng), z[i] = c(rng);
    EXPECT_EQ(form_value(m, product(m, x, y), z), form_value(m, x, product(m, y, z)));
  }
}
