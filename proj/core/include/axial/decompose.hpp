#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/axis.hpp"

namespace axial {

using EigenKey = std::vector<Rat>;

struct JointDecomposition {
  std::vector<Axis> Y;
  std::map<EigenKey, Subspace> components;  // nonzero ones only
  std::size_t empty_keys = 0;               // tuples whose intersection is zero
  Subspace U;                               // the all-zero component, possibly 0
  Subspace a_circ;                          // sum of the components
  bool complete = false;
  bool seress = false;           // every law in Y is Seress
  bool u_subalgebra = false;     // checked on bases
  std::vector<EigenKey> module_failures;  // components with U W not inside W
  std::optional<Subspace> a_sharp;
  bool sharp_module = false;
};

std::string key_string(const EigenKey& k);

// Iterated eigenspace intersections over the law values of each axis. Throws
// PreconditionError naming the pair when some tau_{a_i} moves a_j.
JointDecomposition decompose_joint(const Algebra& alg, const std::vector<Axis>& Y);

// decompose_joint plus A# = perp of A°, with U A# inside A# checked. Throws
// PreconditionError when the form is degenerate on A°.
JointDecomposition partial_decomposition(const Algebra& alg, const std::vector<Axis>& Y);

// {u in outer | (u, inner) = 0}; inner must lie in outer and carry a
// nondegenerate form.
Subspace complement_in(const Algebra& alg, const Subspace& outer, const Subspace& inner);

struct ExtensionSpace {
  Mat phi;  // on U, in coordinates of U's basis
  // Basis of the solution space; each psi is m x m in W's basis, column j
  // the image of the j-th basis vector.
  std::vector<Mat> solutions;
  std::size_t dim() const { return solutions.size(); }
  bool contains(const Mat& psi) const;
};

// All psi on W with u^phi w^psi = (u w)^psi. The equations are homogeneous in
// psi, so the solutions form a linear space.
ExtensionSpace extension_space(const Algebra& alg, const Subspace& U, const Subspace& W, const Mat& phi);

// A probe pairs two products of leaves: "w1*w1 . u", "w1*w2 . w3",
// "(w1*w2)*(w1*w3) . w1". Leaves w<i> (1-based) draw from component i, u
// from U. One random element per leaf symbol, shared within the probe.
struct Probe {
  std::string text;
};

struct ProbeRecord {
  std::string text;
  bool nonzero = false;
  Rat value;
  std::size_t attempts = 0;
  std::map<std::string, Vec> draws;  // accepted (or last) leaf values
  std::vector<int> exponent;         // occurrences of each w_i mod 2
  bool square = false;               // all w-leaves cancel in pairs
};

struct SignKernel {
  std::vector<std::vector<int>> tuples;  // admissible sign tuples, descending
  std::vector<ProbeRecord> records;
  std::vector<bool> square_forced;       // mu_i^2 = 1 established
};

// Sign tuples (mu_1..mu_k) compatible with every nonzero probe. Zero probes
// are re-drawn up to `retries` times, then skipped and reported.
SignKernel sign_kernel(const Algebra& alg, const Subspace& U, const std::vector<Subspace>& components,
                       const std::vector<Probe>& probes, std::uint64_t seed = 1, std::size_t retries = 8);

}  // namespace axial
