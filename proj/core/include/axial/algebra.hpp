#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/exactlin.hpp"

namespace axial {

// Sparse product of two basis vectors: (k, gamma_ij^k) pairs with k increasing.
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

// Commutative algebra by structure constants. Immutable; build through
// AlgebraBuilder, which checks commutativity, the Frobenius identity when a
// Gram matrix is given and the unit when one is given.
class Algebra {
 public:
  Algebra() = default;

  std::size_t dim() const noexcept { return n_; }
  const SparseVec& constants(std::size_t i, std::size_t j) const;
  Vec basis_product(std::size_t i, std::size_t j) const;
  const std::optional<Mat>& gram() const noexcept { return gram_; }
  const std::optional<Vec>& unit() const noexcept { return unit_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t i) const;

 private:
  friend class AlgebraBuilder;
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::vector<SparseVec> gamma_;  // upper triangle, row-major over i <= j
  std::optional<Mat> gram_;
  std::optional<Vec> unit_;
  std::vector<std::string> labels_;
};

class AlgebraBuilder {
 public:
  explicit AlgebraBuilder(std::size_t dim);
  std::size_t dim() const noexcept { return n_; }
  // Sets the full product e_i e_j (and e_j e_i).
  AlgebraBuilder& set_product(std::size_t i, std::size_t j, const Vec& value);
  // Sets one constant gamma_ij^k; re-setting with a different value throws.
  AlgebraBuilder& set_constant(std::size_t i, std::size_t j, std::size_t k, const Rat& value);
  AlgebraBuilder& set_gram(const Mat& gram);
  AlgebraBuilder& set_unit(const Vec& unit);
  AlgebraBuilder& set_labels(std::vector<std::string> labels);
  // Throws ValidationError naming the failing check.
  Algebra build() const;

 private:
  std::size_t n_;
  std::vector<Vec> products_;  // upper triangle, dense while building
  std::vector<std::vector<bool>> set_;
  std::optional<Mat> gram_;
  std::optional<Vec> unit_;
  std::vector<std::string> labels_;
};

Vec product(const Algebra& alg, const Vec& u, const Vec& v);
Mat ad_matrix(const Algebra& alg, const Vec& u);
Rat form_value(const Algebra& alg, const Vec& u, const Vec& v);
const Mat& require_gram(const Algebra& alg);
// The stored unit if present, else find_unit; throws MissingStructure if none.
Vec require_unit(const Algebra& alg);

// First triple (i, j, k) with (e_i e_j, e_k) != (e_i, e_j e_k).
std::optional<std::array<std::size_t, 3>> frobenius_violation(const Algebra& alg, const Mat& gram);

std::optional<Vec> find_unit(const Algebra& alg);
// Orthogonal projection of the unit onto b, verified to act as identity on b.
// Throws PreconditionError when the form is degenerate on b; nullopt when the
// projection is not an identity of b (b not a subalgebra).
std::optional<Vec> unit_of_subalgebra(const Algebra& alg, const Subspace& b);
Subspace subalgebra_closure(const Algebra& alg, const std::vector<Vec>& gens);
bool is_subalgebra(const Algebra& alg, const Subspace& b);
// products of s with w stay inside w
bool is_module(const Algebra& alg, const Subspace& s, const Subspace& w);
Subspace annihilator(const Algebra& alg, const Subspace& w);
Subspace radical(const Algebra& alg);
// Connected components (as index lists) of the graph with edges (a,b) != 0.
std::vector<std::vector<std::size_t>> connectivity_graph(const Algebra& alg, const std::vector<Vec>& axes);
bool is_automorphism(const Algebra& alg, const Mat& g);

// The subalgebra spanned by basis, written in those coordinates, with the
// restricted form and, when available, the projected unit.
Algebra restrict_to(const Algebra& alg, const std::vector<Vec>& basis, std::vector<std::string> labels = {});
Algebra direct_sum(const Algebra& a, const Algebra& b);
// F^n with e_i e_i = e_i, identity Gram matrix and unit (1,...,1).
Algebra field_power(std::size_t n);

}  // namespace axial
