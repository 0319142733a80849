#include "axial/mpoly.hpp"

#include <algorithm>

#include "axial/error.hpp"

namespace axial {

int lex_compare(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

int total_degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

namespace {

bool desc(const Term& a, const Term& b) { return lex_compare(a.exp, b.exp) > 0; }

void check_ring(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw DimensionMismatch("polynomials over different variable counts");
  }
}

}  // namespace

MPoly::MPoly(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
  for (const auto& t : terms) {
    if (t.exp.size() != nvars) throw DimensionMismatch("term exponent length");
  }
  std::sort(terms.begin(), terms.end(), desc);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exp == t.exp) {
      terms_.back().coeff += t.coeff;
      if (sgn(terms_.back().coeff) == 0) terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

MPoly MPoly::constant(std::size_t nvars, const Rat& c) {
  MPoly p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({Exponent(nvars, 0), c});
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  MPoly p(nvars);
  p.terms_.push_back({std::move(e), Rat(1)});
  return p;
}

MPoly MPoly::linear(const Vec& coeffs, const Rat& c0) {
  const std::size_t n = coeffs.size();
  std::vector<Term> t;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    Exponent e(n, 0);
    e[i] = 1;
    t.push_back({std::move(e), coeffs[i]});
  }
  if (sgn(c0) != 0) t.push_back({Exponent(n, 0), c0});
  return MPoly(n, std::move(t));
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.exp));
  return d;
}

int MPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

std::vector<std::size_t> MPoly::support_vars() const {
  std::vector<bool> used(nvars_, false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.exp[i] > 0) used[i] = true;
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (used[i]) r.push_back(i);
  return r;
}

Rat MPoly::constant_term() const {
  if (!terms_.empty() && total_degree(terms_.back().exp) == 0) return terms_.back().coeff;
  return Rat(0);
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return (Rat(1) / terms_.front().coeff) * *this;
}

Rat MPoly::eval(const Vec& point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point length");
  Rat s(0);
  for (const auto& t : terms_) {
    Rat m = t.coeff;
    for (std::size_t i = 0; i < nvars_ && sgn(m) != 0; ++i) {
      for (int k = 0; k < t.exp[i]; ++k) m *= point[i];
    }
    s += m;
  }
  return s;
}

MPoly MPoly::substitute(std::size_t var, const Rat& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rat c = t.coeff;
    for (int k = 0; k < t.exp[var]; ++k) c *= value;
    if (sgn(c) == 0) continue;
    Exponent e = t.exp;
    e[var] = 0;
    out.push_back({std::move(e), c});
  }
  return MPoly(nvars_, std::move(out));
}

MPoly MPoly::compose(const std::vector<MPoly>& subs) const {
  if (subs.size() != nvars_) throw DimensionMismatch("composition arity");
  const std::size_t m = subs.empty() ? 0 : subs[0].nvars();
  MPoly result(m);
  // Cache powers per variable.
  std::vector<std::vector<MPoly>> powers(nvars_);
  for (const auto& t : terms_) {
    MPoly mono = MPoly::constant(m, t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i) {
      const int k = t.exp[i];
      if (k == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(MPoly::constant(m, Rat(1)));
      while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * subs[i]);
      mono = mono * pw[static_cast<std::size_t>(k)];
    }
    result += mono;
  }
  return result;
}

UPoly MPoly::to_univariate(std::size_t var) const {
  std::vector<Rat> c;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i != var && t.exp[i] != 0) throw PreconditionError("polynomial is not univariate");
    }
    const auto k = static_cast<std::size_t>(t.exp[var]);
    if (c.size() <= k) c.resize(k + 1, Rat(0));
    c[k] += t.coeff;
  }
  return UPoly(std::move(c));
}

MPoly MPoly::from_univariate(const UPoly& p, std::size_t nvars, std::size_t var) {
  std::vector<Term> t;
  for (int k = 0; k <= p.degree(); ++k) {
    if (sgn(p.coeff(k)) == 0) continue;
    Exponent e(nvars, 0);
    e.at(var) = k;
    t.push_back({std::move(e), p.coeff(k)});
  }
  return MPoly(nvars, std::move(t));
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

void MPoly::sub_mul_term(const Exponent& e, const Rat& c, const MPoly& g) {
  check_ring(*this, g);
  if (sgn(c) == 0 || g.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Exponent shifted(nvars_);
  auto shift = [&](const Exponent& x) {
    for (std::size_t k = 0; k < nvars_; ++k) shifted[k] = x[k] + e[k];
  };
  bool have = false;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size() && !have) {
      shift(g.terms_[j].exp);
      have = true;
    }
    int cmp;
    if (i == terms_.size()) cmp = -1;
    else if (j == g.terms_.size()) cmp = 1;
    else cmp = lex_compare(terms_[i].exp, shifted);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({shifted, -c * g.terms_[j].coeff});
      ++j;
      have = false;
    } else {
      Rat v = terms_[i].coeff - c * g.terms_[j].coeff;
      if (sgn(v) != 0) out.push_back({std::move(terms_[i].exp), std::move(v)});
      ++i;
      ++j;
      have = false;
    }
  }
  terms_ = std::move(out);
}

Term MPoly::pop_lead() {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

MPoly& MPoly::operator+=(const MPoly& b) {
  sub_mul_term(Exponent(nvars_, 0), Rat(-1), b);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& b) {
  sub_mul_term(Exponent(nvars_, 0), Rat(1), b);
  return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r(a);
  r += b;
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly r(a);
  r -= b;
  return r;
}

MPoly operator-(const MPoly& a) { return Rat(-1) * a; }

MPoly MPoly::mul_term(const Exponent& e, const Rat& c) const {
  MPoly r(nvars_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent x(t.exp);
    for (std::size_t k = 0; k < nvars_; ++k) x[k] += e[k];
    r.terms_.push_back({std::move(x), t.coeff * c});
  }
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_ring(a, b);
  std::vector<Term> all;
  all.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Exponent e(s.exp);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += t.exp[k];
      all.push_back({std::move(e), s.coeff * t.coeff});
    }
  }
  return MPoly(a.nvars_, std::move(all));
}

MPoly operator*(const Rat& c, const MPoly& a) {
  MPoly r(a.nvars_);
  if (sgn(c) == 0) return r;
  r.terms_ = a.terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

std::string MPoly::to_string(const std::vector<std::string>& names_in) const {
  if (terms_.empty()) return "0";
  const auto names = names_in.empty() ? default_names(nvars_) : names_in;
  std::string out;
  for (const auto& t : terms_) {
    const bool neg = sgn(t.coeff) < 0;
    Rat mag = abs(t.coeff);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    if (mono.empty()) {
      out += axial::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += axial::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b) {
  check_ring(a, b);
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  MPoly rem(a);
  std::vector<Term> q;
  const Term& lb = b.lead();
  while (!rem.is_zero()) {
    const Term& lr = rem.lead();
    if (!divides(lb.exp, lr.exp)) return std::nullopt;
    Exponent e(lr.exp);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] -= lb.exp[k];
    Rat c = lr.coeff / lb.coeff;
    rem.sub_mul_term(e, c, b);
    q.push_back({std::move(e), std::move(c)});
  }
  return MPoly(a.nvars(), std::move(q));
}

}  // namespace axial
