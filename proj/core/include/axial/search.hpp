#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/axis.hpp"
#include "axial/groebner.hpp"
#include "axial/mpoly.hpp"

namespace axial {

// A vector of A whose coordinates are polynomials in search unknowns.
using SymVec = std::vector<MPoly>;

// offset + sum_i x_i directions[i]
SymVec affine_vector(const Vec& offset, const std::vector<Vec>& directions);
SymVec symbolic_product(const Algebra& alg, const SymVec& u, const SymVec& v);
// Nonzero coordinates of u^2 - u.
std::vector<MPoly> idempotent_equations(const Algebra& alg, const SymVec& u);

struct IdempotentResult {
  SolveStatus status = SolveStatus::finite;
  std::vector<Vec> idempotents;  // ambient coordinates, sorted
  std::vector<EliminantFactor> eliminant_factors;
  std::vector<MPoly> basis;      // Groebner basis in the search unknowns
  std::size_t unknowns = 0;
};

// Idempotents in offset + span(directions) satisfying the extra equations.
IdempotentResult idempotents_in_affine(const Algebra& alg, const Vec& offset, const std::vector<Vec>& directions,
                                       const std::vector<MPoly>& extra = {}, const GroebnerCaps& caps = {});

// Idempotents u in the subspace (default: all of A). With a length r the
// constraint is the linear (1, u) = r when the algebra has a unit and a form,
// else the quadratic (u, u) = r.
IdempotentResult naive_idempotents(const Algebra& alg, const std::optional<Subspace>& subspace = std::nullopt,
                                   const std::optional<Rat>& length = std::nullopt, const GroebnerCaps& caps = {});

std::vector<Axis> axes_from_idempotents(const Algebra& alg, const IdempotentResult& result, const FusionLaw& law,
                                        bool require_primitive = true);

struct SearchConfig {
  FusionLaw target_law;
  // Axis length; nullopt searches without a length constraint.
  std::optional<Rat> length;
  // Allowed (z, z); nullopt searches every idempotent z in U.
  std::optional<std::vector<Rat>> z_lengths;
  bool include_zero_z = true;
  GroebnerCaps caps;
  // Eigenvalues whose determinant relation is added on a positive-dimensional
  // z-branch, and the (z, z) rows where that is permitted.
  std::vector<Rat> determinant_lambdas;
  std::vector<Rat> determinant_rows;
};

// Monster type (1/4, 1/32) with the Norton-Sakuma (z, z) list, unit length
// axes and the 4A determinant relation for 1/32.
SearchConfig default_search_config();
std::vector<Rat> norton_sakuma_z_lengths();

struct ZBranch {
  std::optional<Rat> z_length;  // nullopt for the unrestricted search or z = 0
  SolveStatus status = SolveStatus::finite;
  std::vector<Vec> zs;
  bool used_determinant_relation = false;
  std::vector<MPoly> basis;  // kept for positive-dimensional branches
  // Inner searches inside A_1(a + z) that did not finish finitely.
  std::size_t unresolved_inner = 0;
};

struct NuancedResult {
  std::vector<Axis> axes;
  std::vector<ZBranch> branches;
  bool complete = true;  // false if any branch stayed positive-dimensional
  std::size_t u_dim = 0;
};

NuancedResult nuanced_axes(const Algebra& alg, const Axis& a, const SearchConfig& cfg);

// det(ad_z|_W - (1 - lambda) Id) for symbolic z with W invariant under ad_z.
MPoly determinant_relation(const Algebra& alg, const SymVec& z, const Subspace& w, const Rat& lambda);

// Fraction-free determinant of a polynomial matrix.
MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m, std::size_t nvars);

void append_unique_axes(std::vector<Axis>& into, const std::vector<Axis>& more);

}  // namespace axial
