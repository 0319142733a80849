#include "oracle.hpp"

#include <algorithm>

#include "axial/exactlin.hpp"
#include "axial/upoly.hpp"

namespace axial::oracle {

namespace {

UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  UPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly basis = UPoly::constant(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UPoly(std::vector<Rat>{-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    out = out + Rat(ys[i] / denom) * basis;
  }
  return out;
}

std::vector<Rat> grid(std::size_t k) {
  std::vector<Rat> g;
  for (std::size_t i = 0; i < k; ++i) g.emplace_back(static_cast<long>(i) - static_cast<long>(k / 2));
  return g;
}

// Coefficients in x2 of f at (x0, x1), up to the given formal degree.
std::vector<Rat> coeffs_in_last(const MPoly& f, const Rat& x0, const Rat& x1, std::size_t deg) {
  std::vector<Rat> c(deg + 1);
  for (const auto& t : f.terms()) {
    Rat v = t.coeff;
    for (int e = 0; e < t.exp[0]; ++e) v *= x0;
    for (int e = 0; e < t.exp[1]; ++e) v *= x1;
    c[t.exp[2]] += v;
  }
  return c;
}

// Bivariate r(x0, x1) = Res_{x2}(f, g), as a grid of values interpolated
// along x1 for each fixed x0.
struct Bivariate {
  std::vector<UPoly> coeff_x1;  // r = sum_j coeff_x1[j](x0) x1^j
  std::size_t deg_x1() const { return coeff_x1.empty() ? 0 : coeff_x1.size() - 1; }
  UPoly at_x0(const Rat& x0) const {
    std::vector<Rat> c;
    for (const auto& p : coeff_x1) c.push_back(p.eval(x0));
    return UPoly(c);
  }
  bool is_zero() const { return coeff_x1.empty(); }
};

std::optional<Bivariate> eliminate_last(const MPoly& f, const MPoly& g) {
  const int df = std::max(f.degree_in(2), 0), dg = std::max(g.degree_in(2), 0);
  if (df == 0 && dg == 0) return std::nullopt;
  const std::size_t bound = static_cast<std::size_t>(std::max(f.degree(), 0) * std::max(g.degree(), 0));
  const auto pts = grid(bound + 1);
  // values[i][j] = Res at (pts[i], pts[j])
  std::vector<UPoly> along_x1;
  for (const Rat& a : pts) {
    std::vector<Rat> vals;
    for (const Rat& b : pts)
      vals.push_back(sylvester(coeffs_in_last(f, a, b, df), df, coeffs_in_last(g, a, b, dg), dg));
    along_x1.push_back(interpolate(pts, vals));
  }
  std::size_t top = 0;
  for (const auto& p : along_x1) top = std::max<std::size_t>(top, p.degree() + 1);
  Bivariate r;
  for (std::size_t j = 0; j < top; ++j) {
    std::vector<Rat> vals;
    for (const auto& p : along_x1) vals.push_back(p.coeff(static_cast<int>(j)));
    r.coeff_x1.push_back(interpolate(pts, vals));
  }
  while (!r.coeff_x1.empty() && r.coeff_x1.back().is_zero()) r.coeff_x1.pop_back();
  return r;
}

}  // namespace

Rat sylvester(const std::vector<Rat>& a, std::size_t m, const std::vector<Rat>& b, std::size_t n) {
  const std::size_t s = m + n;
  if (s == 0) return Rat(1);
  Mat S(s, s);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) S(r, r + k) = a[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) S(n + r, r + k) = b[n - k];
  return determinant(S);
}

std::optional<std::vector<Vec>> resultant_points(const std::vector<MPoly>& f) {
  if (f.size() != 3 || f[0].nvars() != 3) return std::nullopt;
  auto r12 = eliminate_last(f[0], f[1]);
  auto r13 = eliminate_last(f[0], f[2]);
  if (!r12 || !r13 || r12->is_zero() || r13->is_zero()) return std::nullopt;

  UPoly R;
  const std::size_t d1 = r12->deg_x1(), d2 = r13->deg_x1();
  if (d1 == 0 && d2 == 0) {
    R = gcd(r12->coeff_x1[0], r13->coeff_x1[0]);
  } else {
    int bound = 0;
    for (const auto& p : r12->coeff_x1) bound = std::max(bound, p.degree());
    int bound2 = 0;
    for (const auto& p : r13->coeff_x1) bound2 = std::max(bound2, p.degree());
    const auto pts = grid(static_cast<std::size_t>(bound * d2 + bound2 * d1 + 1));
    std::vector<Rat> vals;
    for (const Rat& x0 : pts) {
      std::vector<Rat> a = r12->at_x0(x0).coeffs(), b = r13->at_x0(x0).coeffs();
      a.resize(d1 + 1);
      b.resize(d2 + 1);
      vals.push_back(sylvester(a, d1, b, d2));
    }
    R = interpolate(pts, vals);
  }
  if (R.is_zero()) return std::nullopt;

  std::vector<Vec> out;
  for (const Rat& x0 : rational_roots(R)) {
    const UPoly g1 = gcd(r12->at_x0(x0), r13->at_x0(x0));
    if (g1.is_zero()) return std::nullopt;
    for (const Rat& x1 : rational_roots(g1)) {
      UPoly g2;
      for (const auto& p : f) g2 = gcd(g2, p.substitute(0, x0).substitute(1, x1).to_univariate(2));
      if (g2.is_zero()) return std::nullopt;
      for (const Rat& x2 : rational_roots(g2)) {
        const Vec pt{x0, x1, x2};
        if (std::all_of(f.begin(), f.end(), [&](const MPoly& p) { return p.eval(pt) == 0; })) out.push_back(pt);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace axial::oracle
