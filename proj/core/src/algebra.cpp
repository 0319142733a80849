#include "axial/algebra.hpp"

#include <numeric>

#include "axial/error.hpp"

namespace axial {

namespace {

std::string triple_name(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

void check_len(const Vec& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(n) + ", got " +
                            std::to_string(v.size()));
  }
}

}  // namespace

std::size_t Algebra::pair_index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j >= n_) throw DimensionMismatch("basis index out of range");
  return i * n_ - i * (i + 1) / 2 + j;
}

const SparseVec& Algebra::constants(std::size_t i, std::size_t j) const { return gamma_[pair_index(i, j)]; }

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vec v = zero_vec(n_);
  for (const auto& [k, c] : constants(i, j)) v[k] = c;
  return v;
}

std::string Algebra::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "e" + std::to_string(i + 1);
}

AlgebraBuilder::AlgebraBuilder(std::size_t dim)
    : n_(dim), products_(dim * (dim + 1) / 2, zero_vec(dim)), set_(dim * (dim + 1) / 2, std::vector<bool>(dim, false)) {}

namespace {

std::size_t tri_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  if (j >= n) throw DimensionMismatch("basis index out of range");
  return i * n - i * (i + 1) / 2 + j;
}

}  // namespace

AlgebraBuilder& AlgebraBuilder::set_product(std::size_t i, std::size_t j, const Vec& value) {
  check_len(value, n_, "product value");
  const std::size_t p = tri_index(n_, i, j);
  products_[p] = value;
  set_[p].assign(n_, true);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_constant(std::size_t i, std::size_t j, std::size_t k, const Rat& value) {
  if (k >= n_) throw DimensionMismatch("structure constant index out of range");
  const std::size_t p = tri_index(n_, i, j);
  if (set_[p][k] && products_[p][k] != value) {
    throw ValidationError("asymmetric or conflicting structure constant " + triple_name(i, j, k));
  }
  products_[p][k] = value;
  set_[p][k] = true;
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_gram(const Mat& gram) {
  if (gram.rows() != n_ || gram.cols() != n_) throw DimensionMismatch("Gram matrix size");
  gram_ = gram;
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_unit(const Vec& unit) {
  check_len(unit, n_, "unit");
  unit_ = unit;
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) throw DimensionMismatch("label count");
  labels_ = std::move(labels);
  return *this;
}

Algebra AlgebraBuilder::build() const {
  Algebra a;
  a.n_ = n_;
  a.gamma_.resize(products_.size());
  for (std::size_t p = 0; p < products_.size(); ++p) {
    for (std::size_t k = 0; k < n_; ++k) {
      if (sgn(products_[p][k]) != 0) a.gamma_[p].emplace_back(k, products_[p][k]);
    }
  }
  a.labels_ = labels_;
  if (a.labels_.empty()) {
    for (std::size_t i = 0; i < n_; ++i) a.labels_.push_back("e" + std::to_string(i + 1));
  }
  if (gram_) {
    const Mat& g = *gram_;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (g(i, j) != g(j, i)) throw ValidationError("Gram matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    if (auto bad = frobenius_violation(a, g)) {
      throw ValidationError("Frobenius identity fails for basis triple " + triple_name((*bad)[0], (*bad)[1], (*bad)[2]));
    }
    a.gram_ = g;
  }
  if (unit_) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (product(a, *unit_, unit_vec(n_, j)) != unit_vec(n_, j)) {
        throw ValidationError("unit does not fix basis vector " + std::to_string(j + 1));
      }
    }
    a.unit_ = unit_;
  }
  return a;
}

Vec product(const Algebra& alg, const Vec& u, const Vec& v) {
  const std::size_t n = alg.dim();
  check_len(u, n, "product left factor");
  check_len(v, n, "product right factor");
  Vec r = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(v[j]) == 0) continue;
      const Rat c = u[i] * v[j];
      for (const auto& [k, g] : alg.constants(i, j)) r[k] += c * g;
    }
  }
  return r;
}

Mat ad_matrix(const Algebra& alg, const Vec& u) {
  const std::size_t n = alg.dim();
  check_len(u, n, "ad_matrix");
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, g] : alg.constants(i, j)) m(k, j) += u[i] * g;
    }
  }
  return m;
}

const Mat& require_gram(const Algebra& alg) {
  if (!alg.gram()) throw MissingStructure("algebra has no Frobenius form");
  return *alg.gram();
}

Vec require_unit(const Algebra& alg) {
  if (alg.unit()) return *alg.unit();
  if (auto u = find_unit(alg)) return *u;
  throw MissingStructure("algebra has no unit");
}

Rat form_value(const Algebra& alg, const Vec& u, const Vec& v) { return dot(u, require_gram(alg) * v); }

std::optional<std::array<std::size_t, 3>> frobenius_violation(const Algebra& alg, const Mat& gram) {
  const std::size_t n = alg.dim();
  // lhs(i,j,k) = (e_i e_j, e_k) = (G (e_i e_j))_k
  std::vector<Vec> gp(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gp[i * n + j] = gram * alg.basis_product(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (gp[i * n + j][k] != gp[j * n + k][i]) return std::array<std::size_t, 3>{i, j, k};
  return std::nullopt;
}

std::optional<Vec> find_unit(const Algebra& alg) {
  const std::size_t n = alg.dim();
  if (n == 0) return Vec{};
  Mat sys(n * n, n);
  Vec rhs = zero_vec(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, g] : alg.constants(i, j)) sys(j * n + k, i) += g;
  for (std::size_t j = 0; j < n; ++j) rhs[j * n + j] = 1;
  auto x = solve(sys, rhs);
  if (!x) return std::nullopt;
  return x;
}

std::optional<Vec> unit_of_subalgebra(const Algebra& alg, const Subspace& b) {
  const Mat& g = require_gram(alg);
  const Vec one = require_unit(alg);
  if (b.dim() == 0) return zero_vec(alg.dim());
  const Mat bm = b.basis_matrix();
  const Mat gb = bm.transpose() * g * bm;
  if (sgn(determinant(gb)) == 0) throw PreconditionError("form is degenerate on the subalgebra");
  auto y = solve(gb, bm.transpose() * (g * one));
  Vec p = bm * *y;
  for (const auto& v : b.basis()) {
    if (product(alg, p, v) != v) return std::nullopt;
  }
  return p;
}

Subspace subalgebra_closure(const Algebra& alg, const std::vector<Vec>& gens) {
  const std::size_t n = alg.dim();
  std::vector<Vec> list;
  Subspace s(n);
  std::size_t done = 0;
  auto add = [&](const Vec& v) {
    if (s.contains(v)) return;
    list.push_back(v);
    s = Subspace::span(list, n);
  };
  for (const auto& g : gens) add(g);
  while (done < list.size()) {
    const Vec v = list[done];
    for (std::size_t i = 0; i <= done; ++i) add(product(alg, list[i], v));
    ++done;
  }
  return s;
}

bool is_module(const Algebra& alg, const Subspace& s, const Subspace& w) {
  for (const auto& u : s.basis())
    for (const auto& x : w.basis())
      if (!w.contains(product(alg, u, x))) return false;
  return true;
}

bool is_subalgebra(const Algebra& alg, const Subspace& b) { return is_module(alg, b, b); }

Subspace annihilator(const Algebra& alg, const Subspace& w) {
  const std::size_t n = alg.dim();
  if (w.dim() == 0) return Subspace::full(n);
  std::vector<Vec> rows;
  for (const auto& x : w.basis()) {
    const Mat a = ad_matrix(alg, x);
    for (std::size_t r = 0; r < n; ++r) rows.push_back(a.row(r));
  }
  return kernel(Mat::from_rows(rows));
}

Subspace radical(const Algebra& alg) {
  const Mat& g = require_gram(alg);
  if (g.is_zero()) throw PreconditionError("the Frobenius form must be nonzero");
  return kernel(g);
}

std::vector<std::vector<std::size_t>> connectivity_graph(const Algebra& alg, const std::vector<Vec>& axes) {
  const std::size_t m = axes.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (sgn(form_value(alg, axes[i], axes[j])) != 0) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> slot(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == m) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(i);
  }
  return comps;
}

bool is_automorphism(const Algebra& alg, const Mat& g) {
  const std::size_t n = alg.dim();
  if (g.rows() != n || g.cols() != n || rank(g) != n) return false;
  std::vector<Vec> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = g.col(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (g * alg.basis_product(i, j) != product(alg, img[i], img[j])) return false;
  return true;
}

Algebra restrict_to(const Algebra& alg, const std::vector<Vec>& basis, std::vector<std::string> labels) {
  const std::size_t m = basis.size();
  Coordinates coords(basis, alg.dim());
  AlgebraBuilder b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const Vec p = product(alg, basis[i], basis[j]);
      if (!coords.span().contains(p)) throw PreconditionError("basis does not span a subalgebra");
      b.set_product(i, j, coords.of(p));
    }
  }
  if (alg.gram()) {
    const Mat bm = Mat::from_cols(basis, alg.dim());
    b.set_gram(bm.transpose() * *alg.gram() * bm);
  }
  b.set_labels(std::move(labels));
  Algebra out = b.build();
  if (auto u = find_unit(out)) {
    b.set_unit(*u);
    out = b.build();
  }
  return out;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim() + b.dim();
  AlgebraBuilder out(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      for (const auto& [k, c] : a.constants(i, j)) out.set_constant(i, j, k, c);
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i; j < b.dim(); ++j)
      for (const auto& [k, c] : b.constants(i, j)) out.set_constant(o + i, o + j, o + k, c);
  if (a.gram() && b.gram()) {
    Mat g(n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) g(i, j) = (*a.gram())(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) g(o + i, o + j) = (*b.gram())(i, j);
    out.set_gram(g);
  }
  if (a.unit() && b.unit()) {
    Vec u(*a.unit());
    u.insert(u.end(), b.unit()->begin(), b.unit()->end());
    out.set_unit(u);
  }
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  // Labels may collide; disambiguate the second summand.
  for (std::size_t i = o; i < n; ++i)
    for (std::size_t j = 0; j < o; ++j)
      if (labels[i] == labels[j]) labels[i] += "'";
  out.set_labels(std::move(labels));
  return out.build();
}

Algebra field_power(std::size_t n) {
  AlgebraBuilder b(n);
  Vec one(n, Rat(1));
  for (std::size_t i = 0; i < n; ++i) b.set_constant(i, i, i, Rat(1));
  b.set_gram(Mat::identity(n));
  b.set_unit(one);
  return b.build();
}

}  // namespace axial
