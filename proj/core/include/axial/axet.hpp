#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/axis.hpp"
#include "axial/groebner.hpp"
#include "axial/permutation.hpp"
#include "axial/search.hpp"

namespace axial {

struct Axet {
  std::vector<Axis> axes;  // distinct vectors
  bool closed = false;
  std::optional<std::size_t> index_of(const Vec& v) const;
  const Mat& tau(std::size_t i) const { return axes.at(i).miyamoto; }
};

// g a with eigenspaces, tau and sigma conjugated along.
Axis transport_axis(const Axis& a, const Mat& g, const Mat& g_inverse);

// Orbit closure of the seeds under the taus of every axis found so far.
// Throws SolverCapExceeded past cap axes.
Axet close_axet(const std::vector<Axis>& seeds, std::size_t cap = 5000);

struct MiyGroup {
  std::vector<Mat> generators;               // distinct nontrivial taus
  std::vector<Permutation> generator_perms;  // their action on the axet
  // Faithful when the axes span; then elements are permutations of the axet.
  bool faithful = false;
  std::vector<Permutation> elements;
  std::vector<Mat> matrices;  // only filled by the matrix fallback
  std::size_t order = 0;
};

MiyGroup miyamoto_group(const Algebra& alg, const Axet& axet, std::size_t cap = 100000);

struct AxisSearchOutcome {
  std::vector<Axis> axes;
  SolveStatus status = SolveStatus::finite;
  std::vector<MPoly> basis;  // positive-dimensional leftovers
};

// Axes b != a in a + Ann(A_-(a)) obeying the law of a with tau_b = tau_a,
// A_-(a) the sum of eigenspaces in the minus part of the grading.
AxisSearchOutcome twins_of(const Algebra& alg, const Axis& a, const GroebnerCaps& caps = {});

// Axes x of the law in <Ann([A, tau]), 1> with tau_x = tau.
AxisSearchOutcome tau_realizer(const Algebra& alg, const Mat& tau, const FusionLaw& law, const GroebnerCaps& caps = {});

// Fixed space of the Miyamoto generators.
Subspace fixed_space(const MiyGroup& miy, std::size_t n);

// Idempotents u of the fixed space that are axes of `law` with zero
// beta-eigenspace and also axes of J(alpha). Returned as axes of `law`, so
// sigma carries the Jordan involution.
AxisSearchOutcome jordan_axes(const Algebra& alg, const MiyGroup& miy,
                              const FusionLaw& law = FusionLaw::monster(make_rat(1, 4), make_rat(1, 32)),
                              const GroebnerCaps& caps = {});

struct PairRow {
  std::string label;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> tau_order;
  std::optional<Rat> form;
  std::optional<Rat> identity_length;
  std::optional<bool> zero_product;
};

// Identity lengths of the eight Norton-Sakuma algebras plus ab = 0 for 2B.
std::vector<PairRow> builtin_pair_rows();

struct PairClass {
  std::size_t dim = 0;      // dim <<a, b>>
  std::size_t tau_order = 0;  // |tau_a tau_b|, 0 if beyond the search bound
  std::optional<Rat> form;  // needs a Gram matrix
  bool zero_product = false;
  std::optional<Rat> identity_length;
  std::optional<std::string> label;
  std::vector<std::string> candidates;  // matching rows when ambiguous
};

// Without a reference only the 2B zero-product rule and, for two axes of
// M(1/4, 1/32), the built-in identity lengths are used.
PairClass classify_pair(const Algebra& alg, const Axis& a, const Axis& b,
                        const std::vector<PairRow>* reference = nullptr);

struct AutomorphismGroup {
  std::vector<Mat> elements;          // identity first
  std::vector<Permutation> on_axes;   // matching action on the axet
  std::size_t candidates_tried = 0;   // linear maps built and tested
};

// Automorphisms permuting the axet, from partial assignments on a spanning
// subset pruned by law, length, eigenspace dimensions and form values.
AutomorphismGroup aut_from_axis_permutations(const Algebra& alg, const Axet& axet);

}  // namespace axial
