#include "axial/exactlin.hpp"

#include <algorithm>
#include <sstream>

#include "axial/error.hpp"
#include "axial/upoly.hpp"

namespace axial {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  require_same(a.size(), b.size(), "vector add");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require_same(a.size(), b.size(), "vector sub");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Rat& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vec& a, const Rat& c, const Vec& b) {
  require_same(a.size(), b.size(), "axpy");
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(b[i]) != 0) a[i] += c * b[i];
  }
}

Rat dot(const Vec& a, const Vec& b) {
  require_same(a.size(), b.size(), "dot");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same(rows[r].size(), m.cols_, "matrix row");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, std::size_t n) {
  Mat m(n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Mat Mat::diagonal(const Vec& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Mat::set_col(std::size_t c, const Vec& v) {
  require_same(v.size(), rows_, "matrix column");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Rat Mat::trace() const {
  Rat t(0);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same(a.cols(), b.rows(), "matrix product");
  Mat r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) r(i, j) += x * b(k, j);
      }
    }
  }
  return r;
}

Vec operator*(const Mat& a, const Vec& v) {
  require_same(a.cols(), v.size(), "matrix-vector product");
  Vec r(a.rows(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rat s(0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(v[j]) != 0 && sgn(a(i, j)) != 0) s += a(i, j) * v[j];
    }
    r[i] = s;
  }
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same(a.rows(), b.rows(), "matrix add");
  require_same(a.cols(), b.cols(), "matrix add");
  Mat r(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same(a.rows(), b.rows(), "matrix sub");
  require_same(a.cols(), b.cols(), "matrix sub");
  Mat r(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
  return r;
}

Mat operator*(const Rat& c, const Mat& a) {
  Mat r(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= c;
  return r;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) os << to_string(m.row(r)) << '\n';
  return os.str();
}

RrefResult rref(Mat m) {
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t piv = lead_row;
    while (piv < m.rows() && sgn(m(piv, c)) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) swap(m(piv, j), m(lead_row, j));
    }
    const Rat inv = Rat(1) / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rat f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(lead_row, j)) != 0) m(r, j) -= f * m(lead_row, j);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.rank = lead_row;
  out.form = std::move(m);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Subspace::Subspace(std::size_t ambient) : ambient_(ambient) {}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  for (const auto& v : vectors) require_same(v.size(), ambient, "subspace span");
  RrefResult r = rref(Mat::from_rows(vectors));
  for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.form.row(i));
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vec> e;
  for (std::size_t i = 0; i < ambient; ++i) e.push_back(unit_vec(ambient, i));
  return span(e, ambient);
}

Vec Subspace::reduce(const Vec& v) const {
  require_same(v.size(), ambient_, "subspace reduce");
  Vec r(v);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rat c = r[pivots_[i]];
    if (sgn(c) != 0) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return axial::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same(other.ambient_, ambient_, "subspace containment");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) coords[i] = v.at(pivots_[i]);
  Vec back = zero_vec(ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) axpy(back, coords[i], basis_[i]);
  if (back != v) throw PreconditionError("vector is not in the subspace");
  return coords;
}

Mat Subspace::basis_matrix() const { return Mat::from_cols(basis_, ambient_); }

Coordinates::Coordinates(const std::vector<Vec>& basis, std::size_t ambient)
    : basis_(basis), span_(Subspace::span(basis, ambient)) {
  if (span_.dim() != basis.size()) throw PreconditionError("coordinate basis is linearly dependent");
  const std::size_t m = basis.size();
  Mat c(m, m);
  for (std::size_t j = 0; j < m; ++j) c.set_col(j, span_.coordinates(basis[j]));
  auto inv = inverse(c);
  to_given_ = *inv;
}

Vec Coordinates::of(const Vec& v) const { return to_given_ * span_.coordinates(v); }

Vec Coordinates::combine(const Vec& coords) const {
  if (coords.size() != basis_.size()) throw DimensionMismatch("coordinate vector length");
  Vec r = zero_vec(span_.ambient());
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(r, coords[i], basis_[i]);
  return r;
}

Subspace kernel(const Mat& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace column_space(const Mat& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return Subspace::span(cols, m.rows());
}

Subspace eigenspace(const Mat& m, const Rat& lambda) {
  if (!m.square()) throw DimensionMismatch("eigenspace of a non-square matrix");
  return kernel(m - lambda * Mat::identity(m.rows()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same(a.ambient(), b.ambient(), "subspace sum");
  std::vector<Vec> all(a.basis());
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(all, a.ambient());
}

namespace {

// Orthogonal complement under the standard dot product.
Subspace annihilating_rows(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient());
  return kernel(Mat::from_rows(s.basis()));
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same(a.ambient(), b.ambient(), "subspace intersection");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient());
  if (a == b) return a;
  return annihilating_rows(sum(annihilating_rows(a), annihilating_rows(b)));
}

Subspace perp_space(const Subspace& s, const Mat& gram) {
  require_same(gram.rows(), s.ambient(), "perp_space gram");
  require_same(gram.cols(), s.ambient(), "perp_space gram");
  if (s.dim() == 0) return Subspace::full(s.ambient());
  std::vector<Vec> rows;
  for (const auto& v : s.basis()) rows.push_back(gram * v);
  return kernel(Mat::from_rows(rows));
}

Subspace linear_complement(const Subspace& outer, const Subspace& inner) {
  std::vector<Vec> picked(inner.basis());
  std::vector<Vec> extra;
  Subspace cur = inner;
  for (const auto& v : outer.basis()) {
    if (cur.contains(v)) continue;
    extra.push_back(v);
    picked.push_back(v);
    cur = Subspace::span(picked, outer.ambient());
  }
  return Subspace::span(extra, outer.ambient());
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.form(i, n + j);
  return inv;
}

Rat determinant(const Mat& m) {
  if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
  Mat a(m);
  const std::size_t n = a.rows();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a(piv, c)) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Rat inv = Rat(1) / a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      const Rat f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  require_same(b.size(), m.rows(), "solve");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RrefResult r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.form(i, m.cols());
  return x;
}

std::vector<Rat> charpoly(const Mat& m) {
  if (!m.square()) throw DimensionMismatch("charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  Mat h(m);
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    const std::size_t mrow = j + 1;
    std::size_t i = mrow;
    while (i < n && sgn(h(i, j)) == 0) ++i;
    if (i == n) continue;
    if (i != mrow) {
      for (std::size_t k = 0; k < n; ++k) swap(h(i, k), h(mrow, k));
      for (std::size_t k = 0; k < n; ++k) swap(h(k, i), h(k, mrow));
    }
    const Rat inv = Rat(1) / h(mrow, j);
    for (std::size_t r = mrow + 1; r < n; ++r) {
      if (sgn(h(r, j)) == 0) continue;
      const Rat u = h(r, j) * inv;
      for (std::size_t k = 0; k < n; ++k) h(r, k) -= u * h(mrow, k);
      for (std::size_t k = 0; k < n; ++k) h(k, mrow) += u * h(k, r);
    }
  }
  // p[k] is the charpoly of the leading k x k block.
  std::vector<UPoly> p(n + 1);
  p[0] = UPoly::constant(Rat(1));
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t kk = k - 1;
    p[k] = UPoly(std::vector<Rat>{-h(kk, kk), Rat(1)}) * p[k - 1];
    Rat t(1);
    for (std::size_t i = kk; i-- > 0;) {
      t *= h(i + 1, i);
      if (sgn(t) == 0) break;
      p[k] = p[k] - (t * h(i, kk)) * p[i];
    }
  }
  std::vector<Rat> c = p[n].coeffs();
  c.resize(n + 1, Rat(0));
  return c;
}

Spectrum semisimple_spectrum(const Mat& m) {
  if (!m.square()) throw DimensionMismatch("spectrum of a non-square matrix");
  const std::size_t n = m.rows();
  Spectrum out;
  const UPoly cp(charpoly(m));
  std::size_t total = 0;
  std::size_t algebraic = 0;
  for (const Rat& lambda : rational_roots(cp)) {
    Subspace e = eigenspace(m, lambda);
    algebraic += static_cast<std::size_t>(root_multiplicity(cp, lambda));
    total += e.dim();
    out.parts.push_back({lambda, std::move(e)});
  }
  out.irrational = algebraic < n;
  out.defect = n - total;
  out.semisimple = out.defect == 0;
  return out;
}

}  // namespace axial
