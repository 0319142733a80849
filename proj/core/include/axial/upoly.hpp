#pragma once

#include <string>
#include <vector>

#include "axial/rational.hpp"

namespace axial {

// Dense univariate polynomial over Q, coefficients from the constant term up.
// The zero polynomial has no coefficients; trailing zeros are always trimmed.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly constant(const Rat& c);
  static UPoly x();  // the indeterminate
  static UPoly monomial(const Rat& c, int degree);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const noexcept { return c_; }
  Rat coeff(int i) const;
  Rat lead() const;
  Rat eval(const Rat& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rat& s, const UPoly& a);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

struct DivMod {
  UPoly quot;
  UPoly rem;
};

DivMod divmod(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& f);

// Scales f to an integer polynomial with content 1 and positive leading
// coefficient. Returned coefficients are integers stored as Rat.
UPoly primitive_integer(const UPoly& f);
Int content_of_integer(const UPoly& f);

// Distinct rational roots in increasing order.
std::vector<Rat> rational_roots(const UPoly& f);

// Monic gcd modulo a prime p of integer polynomials (coefficients low to high,
// each in [0, p)). Empty result means every input vanishes mod p.
std::vector<unsigned long> gcd_mod_p(const std::vector<UPoly>& integer_polys, unsigned long p);

// Multiplicity of t as a root of f (f nonzero).
int root_multiplicity(const UPoly& f, const Rat& t);

}  // namespace axial
