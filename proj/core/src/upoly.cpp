#include "axial/upoly.hpp"

#include <algorithm>
#include <cstdint>

#include "axial/error.hpp"

namespace axial {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }

UPoly UPoly::x() { return UPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

UPoly UPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return c_[static_cast<std::size_t>(i)];
}

Rat UPoly::lead() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat UPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return (Rat(1) / c_.back()) * *this;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const Rat& s, const UPoly& a) {
  std::vector<Rat> r(a.c_);
  for (auto& c : r) c *= s;
  return UPoly(std::move(r));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      out += axial::to_string(mag);
      if (i > 0) out += "*";
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<Rat> q(static_cast<std::size_t>(da - db) + 1);
  const Rat inv = Rat(1) / b.lead();
  for (int k = da; k >= db; --k) {
    Rat c = rem[static_cast<std::size_t>(k)] * inv;
    if (sgn(c) == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.monic();
  UPoly y = b.monic();
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).rem.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UPoly squarefree_part(const UPoly& f) {
  if (f.degree() <= 0) return f.monic();
  UPoly g = gcd(f, f.derivative());
  return divmod(f, g).quot.monic();
}

Int content_of_integer(const UPoly& f) {
  Int g(0);
  for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

UPoly primitive_integer(const UPoly& f) {
  if (f.is_zero()) return f;
  Int l(1);
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rat> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.emplace_back(c * Rat(l));
  UPoly g(std::move(v));
  Int cont = content_of_integer(g);
  if (sgn(g.lead()) < 0) cont = -cont;
  return (Rat(1) / Rat(cont)) * g;
}

int root_multiplicity(const UPoly& f, const Rat& t) {
  if (f.is_zero()) throw PreconditionError("multiplicity in the zero polynomial");
  const UPoly lin(std::vector<Rat>{-t, Rat(1)});
  UPoly g = f;
  int m = 0;
  while (g.degree() >= 1 && sgn(g.eval(t)) == 0) {
    g = divmod(g, lin).quot;
    ++m;
  }
  return m;
}

namespace {

using Limb = std::uint64_t;

struct ModPoly {
  std::vector<Limb> c;  // low to high, trimmed
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

Limb mod_pow(Limb b, Limb e, Limb p) {
  Limb r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = static_cast<Limb>((static_cast<unsigned __int128>(r) * b) % p);
    b = static_cast<Limb>((static_cast<unsigned __int128>(b) * b) % p);
    e >>= 1;
  }
  return r;
}

Limb mod_inv(Limb a, Limb p) { return mod_pow(a, p - 2, p); }

ModPoly reduce_mod(const std::vector<Int>& f, Limb p) {
  ModPoly r;
  r.c.resize(f.size());
  Int pp(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Int m;
    mpz_fdiv_r(m.get_mpz_t(), f[i].get_mpz_t(), pp.get_mpz_t());
    r.c[i] = m.get_ui();
  }
  r.trim();
  return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, Limb p) {
  const Limb inv = mod_inv(b.c.back(), p);
  while (a.c.size() >= b.c.size() && !a.c.empty()) {
    const std::size_t shift = a.c.size() - b.c.size();
    const Limb q = static_cast<Limb>((static_cast<unsigned __int128>(a.c.back()) * inv) % p);
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      const Limb t = static_cast<Limb>((static_cast<unsigned __int128>(q) * b.c[j]) % p);
      Limb& dst = a.c[shift + j];
      dst = (dst + p - t) % p;
    }
    a.trim();
  }
  return a;
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b, Limb p) {
  while (!b.c.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.c.empty() ? 0 : a.c.size() - 1;
}

Limb mod_eval(const ModPoly& f, Limb t, Limb p) {
  unsigned __int128 acc = 0;
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = (acc * t + *it) % p;
  return static_cast<Limb>(acc);
}

Int eval_mod(const std::vector<Int>& f, const Int& t, const Int& m) {
  Int acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * t + *it;
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

// Recovers a/b with |a|, |b| <= sqrt(m/2) from r = a/b mod m.
bool rational_reconstruct(const Int& r, const Int& m, Rat& out) {
  Int bound;
  Int half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Int r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  out = Rat(r1, t1);
  out.canonicalize();
  return true;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, Limb p) {
  while (!b.c.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.c.empty()) {
    const Limb inv = mod_inv(a.c.back(), p);
    for (auto& x : a.c) x = static_cast<Limb>((static_cast<unsigned __int128>(x) * inv) % p);
  }
  return a;
}

}  // namespace

std::vector<unsigned long> gcd_mod_p(const std::vector<UPoly>& integer_polys, unsigned long p) {
  if (p < 2) throw PreconditionError("modulus must be a prime");
  ModPoly g;
  for (const auto& f : integer_polys) {
    std::vector<Int> z;
    for (const auto& c : f.coeffs()) {
      if (c.get_den() != 1) throw PreconditionError("gcd_mod_p needs integer coefficients");
      z.push_back(c.get_num());
    }
    g = mod_gcd(g, reduce_mod(z, p), p);
  }
  return std::vector<unsigned long>(g.c.begin(), g.c.end());
}

std::vector<Rat> rational_roots(const UPoly& f) {
  std::vector<Rat> roots;
  if (f.degree() <= 0) return roots;
  UPoly g = squarefree_part(f);
  if (sgn(g.coeff(0)) == 0) {
    roots.emplace_back(0);
    g = divmod(g, UPoly::x()).quot;
  }
  if (g.degree() == 1) {
    roots.push_back(-g.coeff(0) / g.coeff(1));
  } else if (g.degree() >= 2) {
    const UPoly h = primitive_integer(g);
    std::vector<Int> hz;
    for (const auto& c : h.coeffs()) hz.push_back(c.get_num());
    std::vector<Int> dz;
    for (std::size_t i = 1; i < hz.size(); ++i) dz.push_back(hz[i] * static_cast<long>(i));

    // Any root a/b has a | h(0), b | lead, so both are bounded by n_bound.
    Int n_bound = abs(hz.front()) > abs(hz.back()) ? Int(abs(hz.front())) : Int(abs(hz.back()));
    Int need = 2 * n_bound * n_bound;

    Int prime(1009);
    ModPoly hp;
    for (;;) {
      const Limb p = prime.get_ui();
      hp = reduce_mod(hz, p);
      if (hp.c.size() == hz.size()) {
        ModPoly dp = reduce_mod(dz, p);
        if (!dp.c.empty() && mod_gcd_degree(hp, dp, p) == 0) break;
      }
      mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    }
    const Limb p = prime.get_ui();
    for (Limb t = 0; t < p; ++t) {
      if (mod_eval(hp, t, p) != 0) continue;
      Int rho(static_cast<unsigned long>(t));
      Int m = prime;
      while (m <= need) {
        Int m2 = m * m;
        Int fv = eval_mod(hz, rho, m2);
        Int dv = eval_mod(dz, rho, m2);
        Int inv;
        mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t());
        rho = rho - fv * inv;
        mpz_fdiv_r(rho.get_mpz_t(), rho.get_mpz_t(), m2.get_mpz_t());
        m = m2;
      }
      Rat cand;
      if (rational_reconstruct(rho, m, cand) && sgn(h.eval(cand)) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace axial
