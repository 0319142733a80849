#include <gtest/gtest.h>

#include <random>

#include "axial/error.hpp"
#include "axial/groebner.hpp"
#include "axial/search.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace axial;
using fixtures::r;

namespace {

MPoly var(std::size_t n, std::size_t i) { return MPoly::variable(n, i); }
MPoly cst(std::size_t n, const Rat& c) { return MPoly::constant(n, c); }

UPoly up(std::initializer_list<Rat> c) { return UPoly(std::vector<Rat>(c)); }

// Coefficients of s^2 - s in Q2 for s = offset + delta * dir, as polynomials in delta.
std::vector<UPoly> family(const Vec& offset, const Vec& dir) {
  const Algebra q2 = fixtures::q2_table();
  const SymVec s = affine_vector(offset, {dir});
  std::vector<UPoly> out;
  const SymVec sq = symbolic_product(q2, s, s);
  for (std::size_t k = 0; k < 4; ++k) out.push_back((sq[k] - s[k]).to_univariate(0));
  return out;
}

const Vec kDir = fixtures::v({0, 0, -1, 1});

}  // namespace

TEST(RationalRoots, MixedFactors) {
  // (2x - 1)(x + 3)(x^2 + 1) x^2
  UPoly f = up({-1, 2}) * up({3, 1}) * up({1, 0, 1}) * up({0, 0, 1});
  EXPECT_EQ(rational_roots(f), (std::vector<Rat>{r(-3), r(0), r(1, 2)}));
  EXPECT_EQ(root_multiplicity(f, r(0)), 2);
  EXPECT_TRUE(rational_roots(up({1, 0, 1})).empty());
  EXPECT_TRUE(rational_roots(UPoly::constant(r(5))).empty());
}

TEST(RationalRoots, LargeCoefficients) {
  UPoly f = up({r(-12345, 67), r(1)}) * up({r(98765, 4321), r(1)}) * up({r(7), r(0), r(1)});
  EXPECT_EQ(rational_roots(f), (std::vector<Rat>{r(-98765, 4321), r(12345, 67)}));
}

TEST(Groebner, TwoCurves) {
  // x^2 = y, y^2 = x: rational points (0,0), (1,1); the rest need x^2+x+1.
  const std::size_t n = 2;
  MPoly x = var(n, 0), y = var(n, 1);
  SolveResult sr = solve_system({x * x - y, y * y - x}, n);
  EXPECT_EQ(sr.status, SolveStatus::needs_extension);
  EXPECT_EQ(sr.points, (std::vector<Vec>{fixtures::v({0, 0}), fixtures::v({1, 1})}));
  ASSERT_EQ(sr.eliminant_factors.size(), 1u);
  EXPECT_EQ(sr.eliminant_factors[0].poly, up({1, 1, 1}));
  EXPECT_TRUE(sr.eliminant_factors[0].irreducible);
  for (const auto& g : {x * x - y, y * y - x}) EXPECT_TRUE(normal_form(g, sr.basis).is_zero());
}

TEST(Groebner, UnitIdealAndPositiveDimension) {
  const std::size_t n = 2;
  MPoly x = var(n, 0), y = var(n, 1);
  auto gb = buchberger({x * y - cst(n, 1), x});
  EXPECT_TRUE(is_unit_ideal(gb));
  SolveResult empty = solve_system({x * y - cst(n, 1), x}, n);
  EXPECT_EQ(empty.status, SolveStatus::finite);
  EXPECT_TRUE(empty.points.empty());

  SolveResult line = solve_system({x * y}, n);
  EXPECT_EQ(line.status, SolveStatus::positive_dimensional);
  EXPECT_FALSE(ideal_dimension_zero(line.basis, n));
}

TEST(Groebner, ReducedBasisIsCanonical) {
  const std::size_t n = 3;
  MPoly x = var(n, 0), y = var(n, 1), z = var(n, 2);
  std::vector<MPoly> g1{x * x + y * z - cst(n, 2), y * y - z, z * z - z};
  std::vector<MPoly> g2{g1[0] + g1[1], g1[1] - 3 * r(1) * g1[2], g1[2]};
  EXPECT_EQ(buchberger(g1), buchberger(g2));
}

TEST(Groebner, CapIsReported) {
  const std::size_t n = 3;
  MPoly x = var(n, 0), y = var(n, 1), z = var(n, 2);
  GroebnerCaps caps;
  caps.max_basis = 2;
  EXPECT_THROW(buchberger({x * x - y * z, y * y - x * z, z * z - x * y - cst(n, 1)}, caps), SolverCapExceeded);
}

TEST(Groebner, DiagonalIdempotents) {
  const Algebra a = field_power(3);
  IdempotentResult res = naive_idempotents(a);
  EXPECT_EQ(res.status, SolveStatus::finite);
  EXPECT_EQ(res.idempotents.size(), 8u);
}

TEST(Certificate, FamiliesMatchTheTableExpansion) {
  // Family (a): s = -1/6 s1 - 1/6 s2 + 2/3 d1 + delta (d2 - d1).
  auto a = family(fixtures::v({r(-1, 6), r(-1, 6), r(2, 3), 0}), kDir);
  EXPECT_EQ(a[0], up({r(5, 36), r(-1, 3), r(1, 2)}));
  EXPECT_EQ(a[1], a[0]);
  EXPECT_EQ(a[2], up({r(-5, 18), r(1, 6), r(1, 2)}));
  EXPECT_EQ(a[3], up({r(1, 18), r(-5, 6), r(1, 2)}));

  auto b = family(fixtures::v({r(-7, 48), r(-1, 48), r(7, 12), 0}), kDir);
  EXPECT_EQ(b[0], up({r(287, 2304), r(-7, 24), r(1, 2)}));
  EXPECT_EQ(b[1], up({r(35, 2304), r(-7, 24), r(1, 2)}));
  EXPECT_EQ(b[2], up({r(-77, 288), r(5, 24), r(1, 2)}));
  EXPECT_EQ(b[3], up({r(7, 288), r(-19, 24), r(1, 2)}));

  auto d = family(fixtures::v({0, 0, r(1, 2), 0}), kDir);
  EXPECT_EQ(d[0], up({0, r(-1, 4), r(1, 2)}));
  EXPECT_EQ(d[2], up({r(-1, 4), r(1, 4), r(1, 2)}));
  EXPECT_EQ(d[3], up({0, r(-3, 4), r(1, 2)}));
}

TEST(Certificate, HintReproducesConstants) {
  const std::vector<Rat> hint{1, 1, -1, -1};
  auto a = family(fixtures::v({r(-1, 6), r(-1, 6), r(2, 3), 0}), kDir);
  auto b = family(fixtures::v({r(-7, 48), r(-1, 48), r(7, 12), 0}), kDir);
  auto c = family(fixtures::v({r(-1, 48), r(-7, 48), r(7, 12), 0}), kDir);
  auto d = family(fixtures::v({0, 0, r(1, 2), 0}), kDir);
  EXPECT_EQ(certify_no_common_root(a, hint)->constant, r(1, 2));
  EXPECT_EQ(certify_no_common_root(b, hint)->constant, r(49, 128));
  EXPECT_EQ(certify_no_common_root(c, hint)->constant, r(49, 128));
  EXPECT_EQ(certify_no_common_root(d, hint)->constant, r(1, 4));
  EXPECT_TRUE(certify_no_common_root(a, hint)->from_hint);
}

TEST(Certificate, AutomaticMinimalSupport) {
  auto a = family(fixtures::v({r(-1, 6), r(-1, 6), r(2, 3), 0}), kDir);
  auto ca = certify_no_common_root(a);
  ASSERT_TRUE(ca);
  // The s1 and s2 coefficients coincide; the duplicate gets weight 0.
  EXPECT_EQ(ca->coefficients, (std::vector<Rat>{2, 0, -1, -1}));
  EXPECT_EQ(ca->constant, r(1, 2));

  auto d = family(fixtures::v({0, 0, r(1, 2), 0}), kDir);
  auto cd = certify_no_common_root(d);
  ASSERT_TRUE(cd);
  EXPECT_EQ(cd->coefficients, (std::vector<Rat>{2, 0, -1, -1}));
  EXPECT_EQ(cd->constant, r(1, 4));
}

TEST(Certificate, CharacteristicSevenBranch) {
  auto b = family(fixtures::v({r(-7, 48), r(-1, 48), r(7, 12), 0}), kDir);
  auto cb = certify_no_common_root(b);
  ASSERT_TRUE(cb);
  EXPECT_EQ(cb->constant, r(7, 64));
  EXPECT_EQ(cb->lattice_constant % 7, 0);
  bool seven = false;
  for (const auto& br : cb->modular_branches)
    if (br.prime == 7) {
      seven = true;
      EXPECT_EQ(br.common_factor, (std::vector<unsigned long>{0, 1}));  // delta
    }
  EXPECT_TRUE(seven);
}

TEST(Certificate, CommonRootHasNone) {
  EXPECT_FALSE(certify_no_common_root({up({-1, 1}), up({-1, 0, 1})}));
}

TEST(Oracle, SylvesterMatchesKnownResultant) {
  // Res(x^2 - 1, x - 2) = 3
  EXPECT_EQ(oracle::sylvester({-1, 0, 1}, 2, {-2, 1}, 1), r(3));
}

TEST(Oracle, RandomIdempotentSystemsAgree) {
  std::mt19937_64 rng(20261014);
  int compared = 0;
  for (int draw = 0; draw < 60 && compared < 8; ++draw) {
    const Algebra a = fixtures::random_commutative(rng, 3, -2, 2);
    const SymVec u = affine_vector(zero_vec(3), {unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)});
    const auto eqs = idempotent_equations(a, u);
    auto expected = oracle::resultant_points(eqs);
    SolveResult got = solve_system(eqs, 3);
    if (!expected || got.status == SolveStatus::positive_dimensional) continue;
    EXPECT_EQ(got.points, *expected) << "draw " << draw;
    ++compared;
  }
  EXPECT_EQ(compared, 8);
}
