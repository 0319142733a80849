#pragma once

#include <random>
#include <string>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/transposition.hpp"

namespace axial::fixtures {

inline Rat r(long p, long q = 1) { return make_rat(p, q); }
Vec v(std::initializer_list<Rat> xs);

// Q2(1/4) typed in directly from its multiplication table, basis s1 s2 d1 d2.
Algebra q2_table();
Mat q2_gram();

ThreeTranspositionData symmetric_group_data(std::size_t degree);

// F + F on a, b with ab = 0.
Algebra two_b();

// Seven-dimensional algebra on a1 a2 a3 u w1 w2 w3 with three pairwise
// annihilating axes a_i (a_i w_j = beta w_j for j != i, a_i w_i = 0).
// u is an idempotent with u w_i = gamma w_i, w_i^2 = u + beta sum_{k != i} a_k
// and w1 w2 = c w3. Each w_i spans its own joint eigenspace, U = <u>.
// (w_i^2, u) = gamma and (w1 w2, w3) = c.
Algebra triple_sign_algebra(const Rat& beta, const Rat& gamma = make_rat(1, 2), const Rat& c = Rat(1));

// M_{1/4}(S3) + F x, the second summand a Jordan-type-free idempotent line.
Algebra matsuo_plus_point(const Rat& eta);

// Random commutative algebra with constants drawn uniformly from [lo, hi].
Algebra random_commutative(std::mt19937_64& rng, std::size_t dim, int lo, int hi);

std::string data_path(const std::string& name);

}  // namespace axial::fixtures
