#pragma once

#include <cstddef>
#include <vector>

#include "axial/permutation.hpp"

namespace axial {

// A 3-transposition group given by generators and a class of involutions D.
struct ThreeTranspositionData {
  std::vector<Permutation> generators;
  // Sorted by cycle_order_less.
  std::vector<Permutation> D;
  // order[i][j] = |c_i c_j| in {1, 2, 3}.
  std::vector<std::vector<int>> order;
  // third[i][j] = index of c_j c_i c_j when order is 3, else npos.
  std::vector<std::vector<std::size_t>> third;

  std::size_t index_of(const Permutation& p) const;  // npos if absent
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// D is the conjugation closure of rep under the generators. Throws
// PreconditionError unless D consists of involutions with |cd| <= 3.
ThreeTranspositionData make_three_transposition(const std::vector<Permutation>& generators,
                                                const Permutation& rep);

}  // namespace axial
