#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/permutation.hpp"
#include "axial/transposition.hpp"

namespace axial {

// Basis D in data order, labelled by cycle notation, with the form
// (c,c) = 1, (c,d) = 0 for |cd| = 2 and eta/2 for |cd| = 3.
Algebra matsuo_algebra(const ThreeTranspositionData& data, const Rat& eta);

enum class FlipKind { single, double_axis, extra };

struct FlipGenerator {
  FlipKind kind;
  // Indices into D; second equals first for singles.
  std::size_t first;
  std::size_t second;
};

struct FlipResult {
  // Written on the basis singles, doubles, then any extra closure vectors.
  Algebra algebra;
  Algebra matsuo;
  std::vector<Vec> ambient_basis;
  std::vector<FlipGenerator> generators;
};

// sigma acts on D by conjugation and must do so as an involution (or
// trivially). Singles are the sigma-fixed c; doubles are c + c^sigma with
// c c^sigma = 0.
FlipResult double_axes_and_flip(const ThreeTranspositionData& data, const Rat& eta, const Permutation& sigma);

}  // namespace axial
