#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "axial/exactlin.hpp"
#include "axial/rational.hpp"
#include "axial/upoly.hpp"

namespace axial {

using Exponent = std::vector<int>;

// Lex order with x_0 > x_1 > ... > x_{n-1}.
int lex_compare(const Exponent& a, const Exponent& b);
bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
int total_degree(const Exponent& e);

struct Term {
  Exponent exp;
  Rat coeff;
};

// Sparse polynomial in a fixed number of variables. Terms are kept sorted in
// strictly decreasing lex order with nonzero coefficients, so the leading term
// is terms().front().
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  MPoly(std::size_t nvars, std::vector<Term> terms);  // any order, merged

  static MPoly constant(std::size_t nvars, const Rat& c);
  static MPoly variable(std::size_t nvars, std::size_t i);
  // c_0 + sum_i coeffs[i] x_i
  static MPoly linear(const Vec& coeffs, const Rat& c0);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  const Term& lead() const { return terms_.front(); }
  int degree() const;                   // total degree, -1 for zero
  int degree_in(std::size_t var) const; // -1 for zero
  std::vector<std::size_t> support_vars() const;
  Rat constant_term() const;

  MPoly monic() const;
  Rat eval(const Vec& point) const;
  // Substitutes x_var := value.
  MPoly substitute(std::size_t var, const Rat& value) const;
  // Substitutes every variable x_i := subs[i] (polynomials in another ring).
  MPoly compose(const std::vector<MPoly>& subs) const;
  // Viewed as a polynomial in x_var only (all other exponents must be zero).
  UPoly to_univariate(std::size_t var) const;
  static MPoly from_univariate(const UPoly& p, std::size_t nvars, std::size_t var);

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rat& c, const MPoly& a);
  MPoly& operator+=(const MPoly& b);
  MPoly& operator-=(const MPoly& b);
  MPoly mul_term(const Exponent& e, const Rat& c) const;
  // Removes and returns the leading term.
  Term pop_lead();
  // this - c * x^e * g, one merge pass.
  void sub_mul_term(const Exponent& e, const Rat& c, const MPoly& g);

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

// Exact division; nullopt if b does not divide a.
std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b);

// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t n);

}  // namespace axial
