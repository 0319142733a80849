#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "axial/exactlin.hpp"
#include "axial/mpoly.hpp"
#include "axial/upoly.hpp"

namespace axial {

struct GroebnerCaps {
  std::size_t max_basis = 4000;
  std::size_t max_pairs = 500000;
  int max_degree = 48;
};

// Reduced lex Groebner basis, sorted by decreasing leading term. A basis
// containing a nonzero constant is returned as {1}. Throws SolverCapExceeded.
std::vector<MPoly> buchberger(const std::vector<MPoly>& gens, const GroebnerCaps& caps = {});

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis);
MPoly s_polynomial(const MPoly& f, const MPoly& g);
bool is_unit_ideal(const std::vector<MPoly>& basis);

// Every variable is some leading monomial's pure power.
bool ideal_dimension_zero(const std::vector<MPoly>& gb, std::size_t nvars);

enum class SolveStatus { finite, positive_dimensional, needs_extension };
const char* to_string(SolveStatus s);

// A rational-root-free factor of a specialized eliminant: the branch over
// the partial point continues only in a proper extension field.
struct EliminantFactor {
  std::size_t var = 0;
  // Primitive integer polynomial in x_var.
  UPoly poly;
  // Values already fixed for x_{var+1} .. x_{n-1}; earlier slots are zero.
  Vec partial;
  // True when degree <= 3, where no rational root implies irreducible.
  bool irreducible = false;
};

struct SolveResult {
  SolveStatus status = SolveStatus::finite;
  std::vector<Vec> points;  // sorted
  std::vector<EliminantFactor> eliminant_factors;
  std::vector<MPoly> basis;
};

// Rational points of a zero-dimensional lex basis by back-substitution.
SolveResult enumerate_points(const std::vector<MPoly>& gb, std::size_t nvars);
SolveResult solve_system(const std::vector<MPoly>& gens, std::size_t nvars, const GroebnerCaps& caps = {});

struct ModularBranch {
  unsigned long prime = 0;
  // Monic common factor of the polynomials mod prime, low to high.
  std::vector<unsigned long> common_factor;
};

struct NoRootCertificate {
  // One coefficient per input polynomial.
  std::vector<Rat> coefficients;
  Rat constant;
  bool from_hint = false;
  // Positive generator of the constants in the integer span of the primitive
  // integer forms of the distinct inputs.
  Int lattice_constant;
  // Primes dividing lattice_constant modulo which a common root survives.
  std::vector<ModularBranch> modular_branches;
};

// A constant-coefficient combination of the polynomials equal to a nonzero
// constant, proving they share no root in characteristic 0. Without a hint the
// combination of minimal support is chosen, scaled to coprime integers with a
// positive leading entry.
std::optional<NoRootCertificate> certify_no_common_root(const std::vector<UPoly>& polys,
                                                        const std::optional<std::vector<Rat>>& hint = std::nullopt);

}  // namespace axial
