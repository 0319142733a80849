#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "axial/rational.hpp"

namespace axial {

using Vec = std::vector<Rat>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& a);
// a += c * b
void axpy(Vec& a, const Rat& c, const Vec& b);
Rat dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
std::string to_string(const Vec& v);

// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_cols(const std::vector<Vec>& cols, std::size_t n);
  static Mat diagonal(const Vec& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_col(std::size_t c, const Vec& v);
  Mat transpose() const;
  bool is_zero() const;
  Rat trace() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Rat& c, const Mat& a);
std::string to_string(const Mat& m);

struct RrefResult {
  Mat form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Mat m);
std::size_t rank(const Mat& m);

// A subspace of F^n, stored by the nonzero rows of its RREF basis matrix.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient);
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v relative to basis(); v must lie in the subspace.
  Vec coordinates(const Vec& v) const;
  // Reduces v modulo the subspace (pivot entries cleared).
  Vec reduce(const Vec& v) const;
  // Matrix whose columns are the basis vectors (ambient x dim).
  Mat basis_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

// Coordinates relative to an arbitrary linearly independent list.
class Coordinates {
 public:
  Coordinates() = default;
  Coordinates(const std::vector<Vec>& basis, std::size_t ambient);
  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const Subspace& span() const noexcept { return span_; }
  // Throws PreconditionError if v is not in the span.
  Vec of(const Vec& v) const;
  Vec combine(const Vec& coords) const;

 private:
  std::vector<Vec> basis_;
  Subspace span_;
  Mat to_given_;  // RREF coordinates to given-basis coordinates
};

Subspace kernel(const Mat& m);
Subspace column_space(const Mat& m);
Subspace eigenspace(const Mat& m, const Rat& lambda);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// {u | u^T gram v = 0 for every v in s}
Subspace perp_space(const Subspace& s, const Mat& gram);
// Some complement of inner within outer (not orthogonal; coordinate choice).
Subspace linear_complement(const Subspace& outer, const Subspace& inner);

std::optional<Mat> inverse(const Mat& m);
Rat determinant(const Mat& m);
// One solution of m x = b, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Coefficients c_0..c_n of det(t I - m), c_n = 1.
std::vector<Rat> charpoly(const Mat& m);

struct EigenPart {
  Rat lambda;
  Subspace space;
};

struct Spectrum {
  bool semisimple = false;
  // Rational eigenvalues in increasing order with their eigenspaces.
  std::vector<EigenPart> parts;
  // n minus the sum of eigenspace dimensions; positive on failure.
  std::size_t defect = 0;
  // True when the characteristic polynomial has a non-rational root.
  bool irrational = false;
};

Spectrum semisimple_spectrum(const Mat& m);

}  // namespace axial
