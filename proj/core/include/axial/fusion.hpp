#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "axial/rational.hpp"

namespace axial {

// A finite set of eigenvalues with a symmetric table lambda * mu -> subset.
// Subsets are bitmasks over values(), so at most 64 values.
class FusionLaw {
 public:
  using Mask = std::uint64_t;

  FusionLaw() = default;
  // table[i][j] lists the values in values[i] * values[j]. Throws
  // ValidationError unless 1 is a value, the table is symmetric,
  // 1 * l = {l} for l != 0 and 1 * 0 is empty.
  FusionLaw(std::vector<Rat> values, const std::vector<std::vector<std::vector<Rat>>>& table, std::string name = "");

  static FusionLaw jordan(const Rat& eta);
  static FusionLaw monster(const Rat& alpha, const Rat& beta);
  static FusionLaw associative();

  const std::vector<Rat>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::string& name() const noexcept { return name_; }
  std::optional<std::size_t> index_of(const Rat& v) const;
  bool contains(const Rat& v) const { return index_of(v).has_value(); }
  Mask star(std::size_t i, std::size_t j) const { return star_[i][j]; }
  std::vector<Rat> star_values(const Rat& a, const Rat& b) const;
  std::vector<Rat> mask_values(Mask m) const;

  // Values restricted to the subset keep; products intersected with it.
  FusionLaw restricted(Mask keep) const;

  friend bool operator==(const FusionLaw& a, const FusionLaw& b) {
    return a.values_ == b.values_ && a.star_ == b.star_;
  }

 private:
  std::vector<Rat> values_;
  std::vector<std::vector<Mask>> star_;
  std::string name_;
};

bool is_seress(const FusionLaw& law);

struct Grading {
  std::vector<Rat> plus;
  std::vector<Rat> minus;
  FusionLaw::Mask minus_mask = 0;
  bool nontrivial() const { return !minus.empty(); }
};

// The C2-grading with the largest minus part (1 always in plus). The trivial
// grading always exists, so this never fails.
Grading c2_grading(const FusionLaw& law);

std::string describe(const FusionLaw& law);

}  // namespace axial
