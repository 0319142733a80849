#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace axial {

// Permutation of {0..n-1}; image()[i] is the image of i. Composition
// (p * q) applies q first, then p.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  // "(1,2)(3,4)" on points 1..degree; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return img_.size(); }
  std::size_t operator()(std::size_t i) const { return img_.at(i); }
  const std::vector<std::size_t>& images() const noexcept { return img_; }
  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;
  // Disjoint cycles of length >= 2, each starting at its least point, sorted.
  std::vector<std::vector<std::size_t>> cycles() const;
  // 1-based cycle notation.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<std::size_t> img_;
};

// g h g^-1
Permutation conjugate(const Permutation& h, const Permutation& g);

// Orders permutations by their flattened cycle decomposition.
bool cycle_order_less(const Permutation& a, const Permutation& b);

// All elements of the group generated by gens, by breadth-first closure.
// Throws SolverCapExceeded past cap elements.
std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, std::size_t cap = 100000);

}  // namespace axial
