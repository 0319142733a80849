#include "axial/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "axial/error.hpp"

namespace axial {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::finite: return "finite";
    case SolveStatus::positive_dimensional: return "positive_dimensional";
    case SolveStatus::needs_extension: return "needs_extension";
  }
  return "?";
}

namespace {

// Index of the first basis element whose leading monomial divides e.
const MPoly* find_reducer(const Exponent& e, const std::vector<MPoly>& basis) {
  for (const auto& g : basis) {
    if (!g.is_zero() && divides(g.lead().exp, e)) return &g;
  }
  return nullptr;
}

Exponent quotient_exp(const Exponent& big, const Exponent& small) {
  Exponent e(big);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] -= small[k];
  return e;
}

}  // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis) {
  MPoly rem(f);
  std::vector<Term> kept;
  while (!rem.is_zero()) {
    const Term lt = rem.lead();
    if (const MPoly* g = find_reducer(lt.exp, basis)) {
      rem.sub_mul_term(quotient_exp(lt.exp, g->lead().exp), lt.coeff / g->lead().coeff, *g);
    } else {
      kept.push_back(rem.pop_lead());
    }
  }
  return MPoly(f.nvars(), std::move(kept));
}

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  const Exponent l = lcm(f.lead().exp, g.lead().exp);
  MPoly a = f.mul_term(quotient_exp(l, f.lead().exp), Rat(1) / f.lead().coeff);
  a.sub_mul_term(quotient_exp(l, g.lead().exp), Rat(1) / g.lead().coeff, g);
  return a;
}

bool is_unit_ideal(const std::vector<MPoly>& basis) {
  return std::any_of(basis.begin(), basis.end(), [](const MPoly& p) { return !p.is_zero() && p.is_constant(); });
}

std::vector<MPoly> buchberger(const std::vector<MPoly>& gens, const GroebnerCaps& caps) {
  if (gens.empty()) throw PreconditionError("buchberger needs at least one generator");
  const std::size_t n = gens[0].nvars();
  std::vector<MPoly> g;
  for (const auto& p : gens) {
    if (p.nvars() != n) throw DimensionMismatch("generators over different rings");
    if (!p.is_zero()) g.push_back(p.monic());
  }
  if (g.empty()) return {};
  if (is_unit_ideal(g)) return {MPoly::constant(n, Rat(1))};

  // Interreduce the input once; it keeps the pair set small for linear gens.
  {
    std::vector<MPoly> red;
    for (auto& p : g) {
      MPoly r = normal_form(p, red);
      if (r.is_zero()) continue;
      r = r.monic();
      std::vector<MPoly> next;
      for (auto& q : red) {
        if (divides(r.lead().exp, q.lead().exp)) {
          MPoly q2 = normal_form(q, {r});
          if (!q2.is_zero()) next.push_back(q2.monic());
        } else {
          next.push_back(std::move(q));
        }
      }
      next.push_back(std::move(r));
      red = std::move(next);
      if (is_unit_ideal(red)) return {MPoly::constant(n, Rat(1))};
    }
    g = std::move(red);
  }

  using Key = std::tuple<int, Exponent, std::size_t, std::size_t>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      int c = lex_compare(std::get<1>(a), std::get<1>(b));
      if (c != 0) return c < 0;
      return std::tie(std::get<2>(a), std::get<3>(a)) < std::tie(std::get<2>(b), std::get<3>(b));
    }
  };
  std::set<Key, KeyLess> queue;
  std::vector<std::vector<char>> pending;

  auto add_pair = [&](std::size_t i, std::size_t j) {
    Exponent l = lcm(g[i].lead().exp, g[j].lead().exp);
    const int d = total_degree(l);
    queue.insert(Key{d, std::move(l), i, j});
    pending[j][i] = 1;
  };
  auto is_pending = [&](std::size_t i, std::size_t j) {
    return i > j ? pending[i][j] != 0 : pending[j][i] != 0;
  };
  auto add_poly = [&](MPoly p) {
    if (g.size() + 1 > caps.max_basis) throw SolverCapExceeded("Groebner basis size cap exceeded");
    if (p.degree() > caps.max_degree) throw SolverCapExceeded("Groebner degree cap exceeded");
    g.push_back(std::move(p));
    const std::size_t j = g.size() - 1;
    pending.emplace_back(j, 0);
    for (std::size_t i = 0; i < j; ++i) add_pair(i, j);
  };

  {
    std::vector<MPoly> init = std::move(g);
    g.clear();
    for (auto& p : init) add_poly(std::move(p));
  }

  std::size_t processed = 0;
  while (!queue.empty()) {
    auto it = queue.begin();
    const auto [deg, l, i, j] = *it;
    queue.erase(it);
    pending[j][i] = 0;
    if (++processed > caps.max_pairs) throw SolverCapExceeded("Groebner pair cap exceeded");

    const Exponent& li = g[i].lead().exp;
    const Exponent& lj = g[j].lead().exp;
    bool coprime = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (li[k] > 0 && lj[k] > 0) {
        coprime = false;
        break;
      }
    }
    if (coprime) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides(g[k].lead().exp, l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;

    MPoly h = normal_form(s_polynomial(g[i], g[j]), g);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {MPoly::constant(n, Rat(1))};
    add_poly(h.monic());
  }

  // Minimalize, then reduce.
  std::vector<MPoly> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b || !divides(g[b].lead().exp, g[a].lead().exp)) continue;
      if (g[b].lead().exp != g[a].lead().exp || b < a) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<MPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<MPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    MPoly tail = minimal[a];
    Term lt = tail.pop_lead();
    MPoly r = normal_form(tail, others);
    r += MPoly(n, {std::move(lt)});
    reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const MPoly& a, const MPoly& b) { return lex_compare(a.lead().exp, b.lead().exp) > 0; });
  return reduced;
}

bool ideal_dimension_zero(const std::vector<MPoly>& gb, std::size_t nvars) {
  if (is_unit_ideal(gb)) return true;
  std::vector<bool> hit(nvars, false);
  for (const auto& p : gb) {
    if (p.is_zero()) continue;
    const Exponent& e = p.lead().exp;
    std::size_t nz = 0;
    std::size_t at = 0;
    for (std::size_t k = 0; k < nvars; ++k) {
      if (e[k] > 0) {
        ++nz;
        at = k;
      }
    }
    if (nz == 1) hit[at] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

SolveResult enumerate_points(const std::vector<MPoly>& gb, std::size_t nvars) {
  SolveResult out;
  out.basis = gb;
  if (is_unit_ideal(gb)) return out;
  if (!ideal_dimension_zero(gb, nvars)) throw PreconditionError("enumerate_points needs a zero-dimensional ideal");

  // Basis elements by their smallest-index variable.
  std::vector<std::vector<const MPoly*>> level(nvars);
  for (const auto& p : gb) {
    auto vars = p.support_vars();
    if (vars.empty()) continue;
    level[vars.front()].push_back(&p);
  }

  std::vector<Vec> branches{zero_vec(nvars)};
  for (std::size_t k = nvars; k-- > 0;) {
    std::vector<Vec> next;
    for (const Vec& partial : branches) {
      UPoly acc;
      for (std::size_t lv = k; lv < nvars; ++lv) {
        for (const MPoly* p : level[lv]) {
          MPoly s = *p;
          for (std::size_t v = k + 1; v < nvars; ++v) s = s.substitute(v, partial[v]);
          const UPoly u = s.to_univariate(k);
          acc = gcd(acc, u);
        }
      }
      if (acc.is_zero()) throw Error("enumerate_points: free variable in a zero-dimensional basis");
      if (acc.degree() == 0) continue;
      UPoly rest = squarefree_part(acc);
      for (const Rat& r : rational_roots(acc)) {
        Vec pt = partial;
        pt[k] = r;
        next.push_back(std::move(pt));
        rest = divmod(rest, UPoly(std::vector<Rat>{-r, Rat(1)})).quot;
      }
      if (rest.degree() >= 1) {
        EliminantFactor f;
        f.var = k;
        f.poly = primitive_integer(rest);
        f.partial = partial;
        f.irreducible = rest.degree() <= 3;
        out.eliminant_factors.push_back(std::move(f));
      }
    }
    branches = std::move(next);
  }
  for (const Vec& pt : branches) {
    for (const auto& p : gb) {
      if (sgn(p.eval(pt)) != 0) throw Error("enumerate_points: back-substituted point fails a basis element");
    }
  }
  std::sort(branches.begin(), branches.end());
  out.points = std::move(branches);
  out.status = out.eliminant_factors.empty() ? SolveStatus::finite : SolveStatus::needs_extension;
  return out;
}

SolveResult solve_system(const std::vector<MPoly>& gens, std::size_t nvars, const GroebnerCaps& caps) {
  std::vector<MPoly> nz;
  for (const auto& p : gens)
    if (!p.is_zero()) nz.push_back(p);
  if (nz.empty()) {
    SolveResult r;
    if (nvars == 0) {
      r.points.push_back(Vec{});
    } else {
      r.status = SolveStatus::positive_dimensional;
    }
    return r;
  }
  std::vector<MPoly> gb = buchberger(nz, caps);
  if (!ideal_dimension_zero(gb, nvars)) {
    SolveResult r;
    r.status = SolveStatus::positive_dimensional;
    r.basis = std::move(gb);
    return r;
  }
  return enumerate_points(gb, nvars);
}

namespace {

// Lattice generator of integer combinations of rows that vanish outside the
// last column, via integer row echelon form.
Int last_column_lattice(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return Int(0);
  const std::size_t cols = rows[0].size();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = lead; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[lead], rows[best]);
      bool clean = true;
      for (std::size_t r = lead + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[lead][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) rows[r][j] -= q * rows[lead][j];
        if (rows[r][c] != 0) clean = false;
      }
      if (clean) {
        if (c == cols - 1) return abs(rows[lead][c]);
        ++lead;
        break;
      }
    }
  }
  return Int(0);
}

std::vector<unsigned long> small_prime_factors(Int d) {
  std::vector<unsigned long> ps;
  d = abs(d);
  for (unsigned long p = 2; p < 1000000 && Int(p) * Int(p) <= d; ++p) {
    if (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
      ps.push_back(p);
      while (mpz_divisible_ui_p(d.get_mpz_t(), p)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
    }
  }
  if (d > 1 && d.fits_ulong_p()) ps.push_back(d.get_ui());
  return ps;
}

// Coordinates of sum c_i p_i, degree 0 .. max.
std::vector<Rat> combine(const std::vector<UPoly>& polys, const std::vector<Rat>& c) {
  UPoly s;
  for (std::size_t i = 0; i < polys.size(); ++i) s = s + c[i] * polys[i];
  return s.coeffs();
}

std::vector<Rat> primitive_vector(std::vector<Rat> v) {
  Int l(1);
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Int g(0);
  for (auto& x : v) {
    x *= Rat(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g == 0) return v;
  Rat s = Rat(1) / Rat(g);
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      if (sgn(x) < 0) s = -s;
      break;
    }
  }
  for (auto& x : v) x *= s;
  return v;
}

}  // namespace

std::optional<NoRootCertificate> certify_no_common_root(const std::vector<UPoly>& polys,
                                                        const std::optional<std::vector<Rat>>& hint) {
  if (polys.size() < 2) throw PreconditionError("certify_no_common_root needs at least two polynomials");
  NoRootCertificate cert;

  std::vector<UPoly> distinct;
  std::vector<std::size_t> rep;  // index into polys of each distinct entry
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (std::find(distinct.begin(), distinct.end(), polys[i]) == distinct.end()) {
      distinct.push_back(polys[i]);
      rep.push_back(i);
    }
  }

  bool found = false;
  if (hint) {
    if (hint->size() != polys.size()) throw DimensionMismatch("hint length differs from polynomial count");
    const auto c = combine(polys, *hint);
    if (c.size() == 1) {
      cert.coefficients = *hint;
      cert.constant = c[0];
      cert.from_hint = true;
      found = true;
    }
  }

  if (!found) {
    int maxdeg = 0;
    for (const auto& p : distinct) maxdeg = std::max(maxdeg, p.degree());
    const std::size_t m = distinct.size();
    // Minimal support first; supports are tried in size then lex order.
    for (std::size_t size = 1; size <= m && !found; ++size) {
      std::vector<bool> mask(m, false);
      std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
      do {
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < m; ++i)
          if (mask[i]) cols.push_back(i);
        Mat sys(static_cast<std::size_t>(std::max(maxdeg, 1)), size);
        for (std::size_t c = 0; c < size; ++c)
          for (int d = 1; d <= maxdeg; ++d) sys(static_cast<std::size_t>(d - 1), c) = distinct[cols[c]].coeff(d);
        const Subspace k = kernel(sys);
        for (const auto& v : k.basis()) {
          Rat cst(0);
          for (std::size_t c = 0; c < size; ++c) cst += v[c] * distinct[cols[c]].coeff(0);
          if (sgn(cst) == 0) continue;
          std::vector<Rat> full(m, Rat(0));
          for (std::size_t c = 0; c < size; ++c) full[cols[c]] = v[c];
          full = primitive_vector(full);
          cert.coefficients.assign(polys.size(), Rat(0));
          for (std::size_t i = 0; i < m; ++i) cert.coefficients[rep[i]] = full[i];
          cert.constant = combine(polys, cert.coefficients).at(0);
          found = true;
          break;
        }
      } while (!found && std::prev_permutation(mask.begin(), mask.end()));
    }
  }
  if (!found) return std::nullopt;

  int maxdeg = 0;
  std::vector<UPoly> prim;
  for (const auto& p : distinct) {
    prim.push_back(primitive_integer(p));
    maxdeg = std::max(maxdeg, p.degree());
  }
  std::vector<std::vector<Int>> rows;
  for (const auto& p : prim) {
    std::vector<Int> r;
    for (int d = maxdeg; d >= 0; --d) r.push_back(p.coeff(d).get_num());
    rows.push_back(std::move(r));
  }
  cert.lattice_constant = last_column_lattice(std::move(rows));
  for (unsigned long p : small_prime_factors(cert.lattice_constant)) {
    auto g = gcd_mod_p(prim, p);
    if (g.size() >= 2) cert.modular_branches.push_back({p, std::move(g)});
  }
  return cert;
}

}  // namespace axial
