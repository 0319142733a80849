#include <gtest/gtest.h>

#include "axial/error.hpp"
#include "axial/io.hpp"
#include "fixtures.hpp"

using namespace axial;
using fixtures::r;
using fixtures::v;

namespace {

void expect_same_table(const Algebra& a, const Algebra& b) {
  ASSERT_EQ(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) EXPECT_EQ(a.basis_product(i, j), b.basis_product(i, j)) << i << "," << j;
}

int error_line(std::string_view text) {
  try {
    parse_algebra(text);
  } catch (const ValidationError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(AlgebraFile, Q2MatchesTypedTable) {
  AlgebraFile f = read_algebra_file(fixtures::data_path("q2.alg"));
  EXPECT_EQ(f.name, "Q2");
  expect_same_table(f.algebra, fixtures::q2_table());
  EXPECT_EQ(f.algebra.gram(), fixtures::q2_gram());
  EXPECT_EQ(f.algebra.unit(), v({r(2, 3), r(2, 3), r(2, 3), r(2, 3)}));
  EXPECT_EQ(f.algebra.labels(), (std::vector<std::string>{"s1", "s2", "d1", "d2"}));
  ASSERT_EQ(f.axes.size(), 4u);
  EXPECT_EQ(f.axes[2].law_tag, "m:1/2:1/4");
  std::vector<Axis> axes = load_axes(f);
  EXPECT_EQ(axes[0].law, FusionLaw::jordan(r(1, 4)));
  EXPECT_EQ(axes[3].law, FusionLaw::monster(r(1, 2), r(1, 4)));
}

TEST(AlgebraFile, RoundTrip) {
  AlgebraFile f = read_algebra_file(fixtures::data_path("q2.alg"));
  AlgebraFile g = parse_algebra(emit_algebra(f));
  expect_same_table(f.algebra, g.algebra);
  EXPECT_EQ(f.algebra.gram(), g.algebra.gram());
  EXPECT_EQ(f.algebra.unit(), g.algebra.unit());
  EXPECT_EQ(f.name, g.name);
  ASSERT_EQ(g.axes.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(f.axes[i].vector, g.axes[i].vector);

  const Algebra t = fixtures::triple_sign_algebra(r(1, 4));
  expect_same_table(parse_algebra(emit_algebra(t)).algebra, t);
}

TEST(AlgebraFile, TripleSignDataMatchesFixture) {
  AlgebraFile f = read_algebra_file(fixtures::data_path("triple_sign.alg"));
  expect_same_table(f.algebra, fixtures::triple_sign_algebra(r(1, 4)));
  EXPECT_EQ(load_axes(f).size(), 3u);
}

TEST(AlgebraFile, ZeroAlgebraAndComments) {
  AlgebraFile f = parse_algebra("# nothing\naxial-algebra 1\ndim 1   # one basis vector\nproducts\nend\n");
  EXPECT_EQ(f.algebra.dim(), 1u);
  EXPECT_EQ(f.algebra.basis_product(0, 0), v({0}));
  EXPECT_FALSE(f.algebra.gram());
}

TEST(AlgebraFile, SwappedIndicesAccepted) {
  AlgebraFile f = parse_algebra("axial-algebra 1\ndim 2\nproducts\n2 1 1 3\nend\n");
  EXPECT_EQ(f.algebra.basis_product(0, 1), v({3, 0}));
}

TEST(AlgebraFile, CustomLaw) {
  AlgebraFile f = parse_algebra(
      "axial-algebra 1\ndim 1\nproducts\n1 1 1 1\nend\naxes\ncustom 1\nend\n"
      "law custom\nvalues 1 0\nstar 1 1 : 1\nstar 1 0 :\nstar 0 0 : 0\nend\n");
  ASSERT_TRUE(f.law);
  EXPECT_EQ(f.law->name(), "custom");
  EXPECT_EQ(load_axes(f).size(), 1u);
  EXPECT_EQ(parse_law_text(emit_law(*f.law)), *f.law);
}

TEST(AlgebraFile, ErrorsCarryLineNumbers) {
  EXPECT_THROW(read_algebra_file(fixtures::data_path("broken_frobenius.alg")), ValidationError);
  EXPECT_EQ(error_line("axial-algebra 1\ndim 2\nproducts\n1 1 1 1/0\nend\n"), 4);
  EXPECT_EQ(error_line("axial-algebra 1\ndim 2\nproducts\n1 1 1 x\nend\n"), 4);
  EXPECT_EQ(error_line("axial-algebra 1\ndim 2\nproducts\n1 3 1 1\nend\n"), 4);
  EXPECT_EQ(error_line("axial-algebra 1\ndim 1\nproducts\n1 1 1 1\n1 1 1 2\nend\n"), 5);
  EXPECT_EQ(error_line("axial-algebra 2\ndim 1\n"), 1);
  EXPECT_EQ(error_line("axial-algebra 1\ndim 1\nproducts\n1 1 1 1\n"), 3);  // unterminated section points at its header
  EXPECT_EQ(error_line("axial-algebra 1\ndim 1\nproducts\n1 1 1 1\nend\nunit 2\n"), 6);
  EXPECT_EQ(error_line("axial-algebra 1\ndim 2\nproducts\n1 1 1 1\n2 2 2 1\nend\ngram\n1\n1/2 1\nend\n"), 7);
  EXPECT_EQ(error_line("axial-algebra 1\ndim 1\nproducts\nend\nfrobnicate\n"), 5);
}

TEST(LawSpec, Forms) {
  EXPECT_EQ(parse_law_spec("m:1/4:1/32"), FusionLaw::monster(r(1, 4), r(1, 32)));
  EXPECT_EQ(parse_law_spec("j:2"), FusionLaw::jordan(r(2)));
  EXPECT_EQ(parse_law_spec("assoc"), FusionLaw::associative());
  EXPECT_THROW(parse_law_spec("custom"), ValidationError);
  EXPECT_THROW(parse_law_spec("m:1/4"), ValidationError);
  EXPECT_THROW(parse_law_spec("j:1"), Error);
  EXPECT_EQ(parse_law_spec("custom", FusionLaw::jordan(r(1, 4))), FusionLaw::jordan(r(1, 4)));
}

TEST(GroupFile, Parse) {
  GroupFile g = read_group_file(fixtures::data_path("s3.grp"));
  EXPECT_EQ(g.degree, 3u);
  EXPECT_EQ(g.generators.size(), 2u);
  EXPECT_EQ(g.representative, Permutation::parse_cycles("(1,2)", 3));
  EXPECT_THROW(parse_group("degree 3\ngen (1,4)\nclass (1,2)\n"), ValidationError);
  EXPECT_THROW(parse_group("degree 3\ngen (1,2)\n"), ValidationError);
}

TEST(PairReference, Parse) {
  std::vector<PairRow> rows =
      parse_pair_reference("# comment\npair 2A dim 3 order 2 form 1/8 length 12/5 zero 0\npair 2B zero 1\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].label, "2A");
  EXPECT_EQ(rows[0].dim, 3u);
  EXPECT_EQ(rows[0].form, r(1, 8));
  EXPECT_EQ(rows[0].identity_length, r(12, 5));
  EXPECT_EQ(rows[0].zero_product, false);
  EXPECT_EQ(rows[1].zero_product, true);
  EXPECT_FALSE(rows[1].dim);
  EXPECT_THROW(parse_pair_reference("pair 2A dim\n"), ValidationError);
  EXPECT_THROW(parse_pair_reference("pair 2A colour red\n"), ValidationError);
}

TEST(Axes, FailingRecordRejected) {
  EXPECT_THROW(load_axes(parse_algebra("axial-algebra 1\ndim 2\nproducts\n1 1 1 1\n2 2 2 1\nend\naxes\nj:1/4 2 0\nend\n")),
               ValidationError);
}
