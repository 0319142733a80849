#include "fixtures.hpp"

#include "axial/matsuo.hpp"
#include "axial/permutation.hpp"

namespace axial::fixtures {

Vec v(std::initializer_list<Rat> xs) { return Vec(xs); }

Algebra q2_table() {
  AlgebraBuilder b(4);
  const Rat e(1, 8), q(1, 4);
  b.set_product(0, 0, v({1, 0, 0, 0}));
  b.set_product(1, 1, v({0, 1, 0, 0}));
  b.set_product(2, 2, v({0, 0, 1, 0}));
  b.set_product(3, 3, v({0, 0, 0, 1}));
  b.set_product(0, 1, v({0, 0, 0, 0}));
  b.set_product(0, 2, v({2 * e, 0, e, -e}));
  b.set_product(0, 3, v({2 * e, 0, -e, e}));
  b.set_product(1, 2, v({0, 2 * e, e, -e}));
  b.set_product(1, 3, v({0, 2 * e, -e, e}));
  b.set_product(2, 3, v({-q, -q, q, q}));
  b.set_gram(q2_gram());
  b.set_unit(v({r(2, 3), r(2, 3), r(2, 3), r(2, 3)}));
  b.set_labels({"s1", "s2", "d1", "d2"});
  return b.build();
}

Mat q2_gram() {
  const Rat q(1, 4), h(1, 2);
  return Mat::from_rows({v({1, 0, q, q}), v({0, 1, q, q}), v({q, q, 2, h}), v({q, q, h, 2})});
}

ThreeTranspositionData symmetric_group_data(std::size_t degree) {
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < degree; ++i) {
    gens.push_back(Permutation::parse_cycles("(" + std::to_string(i) + "," + std::to_string(i + 1) + ")", degree));
  }
  return make_three_transposition(gens, Permutation::parse_cycles("(1,2)", degree));
}

Algebra two_b() {
  AlgebraBuilder b(2);
  b.set_constant(0, 0, 0, Rat(1)).set_constant(1, 1, 1, Rat(1));
  b.set_gram(Mat::identity(2)).set_unit(v({1, 1})).set_labels({"a", "b"});
  return b.build();
}

Algebra triple_sign_algebra(const Rat& beta, const Rat& gamma, const Rat& c) {
  // a_i = 0..2, u = 3, w_i = 4..6; (w_i, w_i) = q and (u, u) = p = gamma q
  const Rat q(1), p = gamma * q;
  AlgebraBuilder b(7);
  for (std::size_t i = 0; i < 3; ++i) {
    b.set_constant(i, i, i, Rat(1));
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) b.set_constant(i, 4 + j, 4 + j, beta);
  }
  b.set_constant(3, 3, 3, Rat(1));
  for (std::size_t i = 0; i < 3; ++i) {
    b.set_constant(3, 4 + i, 4 + i, gamma);
    b.set_constant(4 + i, 4 + i, 3, Rat(1));
    for (std::size_t k = 0; k < 3; ++k)
      if (k != i) b.set_constant(4 + i, 4 + i, k, beta * q);
  }
  b.set_constant(4, 5, 6, c).set_constant(4, 6, 5, c).set_constant(5, 6, 4, c);
  Mat g(7, 7);
  for (std::size_t i = 0; i < 3; ++i) {
    g(i, i) = 1;
    g(4 + i, 4 + i) = q;
  }
  g(3, 3) = p;
  b.set_gram(g).set_labels({"a1", "a2", "a3", "u", "w1", "w2", "w3"});
  return b.build();
}

Algebra matsuo_plus_point(const Rat& eta) {
  AlgebraBuilder pt(1);
  pt.set_constant(0, 0, 0, Rat(1)).set_gram(Mat::identity(1)).set_unit(v({1})).set_labels({"x"});
  return direct_sum(matsuo_algebra(symmetric_group_data(3), eta), pt.build());
}

Algebra random_commutative(std::mt19937_64& rng, std::size_t dim, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  AlgebraBuilder b(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) b.set_constant(i, j, k, Rat(dist(rng)));
  return b.build();
}

std::string data_path(const std::string& name) { return std::string(AXIAL_DATA_DIR) + "/" + name; }

}  // namespace axial::fixtures
