#include "axial/search.hpp"

#include <algorithm>

#include "axial/error.hpp"

namespace axial {

SymVec affine_vector(const Vec& offset, const std::vector<Vec>& directions) {
  const std::size_t n = offset.size();
  const std::size_t m = directions.size();
  SymVec out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = directions[i].at(k);
    out.push_back(MPoly::linear(c, offset[k]));
  }
  return out;
}

SymVec symbolic_product(const Algebra& alg, const SymVec& u, const SymVec& v) {
  const std::size_t n = alg.dim();
  if (u.size() != n || v.size() != n) throw DimensionMismatch("symbolic product length");
  const std::size_t m = n == 0 ? 0 : u[0].nvars();
  SymVec res(n, MPoly(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero() || alg.constants(i, j).empty()) continue;
      const MPoly pp = u[i] * v[j];
      for (const auto& [k, g] : alg.constants(i, j)) res[k] += g * pp;
    }
  }
  return res;
}

std::vector<MPoly> idempotent_equations(const Algebra& alg, const SymVec& u) {
  SymVec sq = symbolic_product(alg, u, u);
  std::vector<MPoly> eqs;
  for (std::size_t k = 0; k < sq.size(); ++k) {
    MPoly e = sq[k] - u[k];
    if (!e.is_zero()) eqs.push_back(std::move(e));
  }
  return eqs;
}

IdempotentResult idempotents_in_affine(const Algebra& alg, const Vec& offset, const std::vector<Vec>& directions,
                                       const std::vector<MPoly>& extra, const GroebnerCaps& caps) {
  const std::size_t m = directions.size();
  const SymVec u = affine_vector(offset, directions);
  std::vector<MPoly> eqs = idempotent_equations(alg, u);
  eqs.insert(eqs.end(), extra.begin(), extra.end());
  IdempotentResult out;
  out.unknowns = m;
  const SolveResult sr = solve_system(eqs, m, caps);
  out.status = sr.status;
  out.eliminant_factors = sr.eliminant_factors;
  out.basis = sr.basis;
  for (const Vec& x : sr.points) {
    Vec p = offset;
    for (std::size_t i = 0; i < m; ++i) axpy(p, x[i], directions[i]);
    out.idempotents.push_back(std::move(p));
  }
  std::sort(out.idempotents.begin(), out.idempotents.end());
  return out;
}

IdempotentResult naive_idempotents(const Algebra& alg, const std::optional<Subspace>& subspace,
                                   const std::optional<Rat>& length, const GroebnerCaps& caps) {
  const std::size_t n = alg.dim();
  const Subspace s = subspace ? *subspace : Subspace::full(n);
  const auto& dirs = s.basis();
  std::vector<MPoly> extra;
  if (length) {
    const Mat& g = require_gram(alg);
    std::optional<Vec> one = alg.unit();
    if (!one) one = find_unit(alg);
    if (one) {
      // (u, u) = (1, u) for idempotents, so the length condition is linear.
      const Vec g1 = g * *one;
      Vec c(dirs.size());
      for (std::size_t i = 0; i < dirs.size(); ++i) c[i] = dot(g1, dirs[i]);
      extra.push_back(MPoly::linear(c, -*length));
    } else {
      const SymVec u = affine_vector(zero_vec(n), dirs);
      MPoly q(dirs.size());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (sgn(g(i, j)) != 0) q += g(i, j) * (u[i] * u[j]);
      extra.push_back(q - MPoly::constant(dirs.size(), *length));
    }
  }
  return idempotents_in_affine(alg, zero_vec(n), dirs, extra, caps);
}

std::vector<Axis> axes_from_idempotents(const Algebra& alg, const IdempotentResult& result, const FusionLaw& law,
                                        bool require_primitive) {
  std::vector<Axis> out;
  for (const Vec& u : result.idempotents) {
    AxisCheck c = check_axis(alg, u, law, require_primitive);
    if (c) out.push_back(std::move(*c.axis));
  }
  return out;
}

std::vector<Rat> norton_sakuma_z_lengths() {
  return {make_rat(7, 5), make_rat(1), make_rat(81, 35), make_rat(21, 11),
          make_rat(3),    make_rat(14, 5), make_rat(25, 7), make_rat(41, 10)};
}

SearchConfig default_search_config() {
  SearchConfig cfg;
  cfg.target_law = FusionLaw::monster(make_rat(1, 4), make_rat(1, 32));
  cfg.length = Rat(1);
  cfg.z_lengths = norton_sakuma_z_lengths();
  cfg.determinant_lambdas = {make_rat(1, 32)};
  cfg.determinant_rows = {make_rat(3)};
  return cfg;
}

void append_unique_axes(std::vector<Axis>& into, const std::vector<Axis>& more) {
  for (const auto& a : more) {
    const bool dup = std::any_of(into.begin(), into.end(), [&](const Axis& b) { return b.vector == a.vector; });
    if (!dup) into.push_back(a);
  }
}

MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m, std::size_t nvars) {
  const std::size_t k = m.size();
  if (k == 0) return MPoly::constant(nvars, Rat(1));
  MPoly prev = MPoly::constant(nvars, Rat(1));
  bool negate = false;
  for (std::size_t c = 0; c + 1 < k; ++c) {
    if (m[c][c].is_zero()) {
      std::size_t r = c + 1;
      while (r < k && m[r][c].is_zero()) ++r;
      if (r == k) return MPoly(nvars);
      std::swap(m[r], m[c]);
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < k; ++j) {
        MPoly num = m[i][j] * m[c][c] - m[i][c] * m[c][j];
        auto q = exact_divide(num, prev);
        if (!q) throw Error("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
      m[i][c] = MPoly(nvars);
    }
    prev = m[c][c];
  }
  MPoly d = m[k - 1][k - 1];
  return negate ? -d : d;
}

MPoly determinant_relation(const Algebra& alg, const SymVec& z, const Subspace& w, const Rat& lambda) {
  if (lambda == 1) throw PreconditionError("the determinant relation is trivial for lambda = 1");
  const std::size_t m = w.dim();
  const std::size_t nv = z.empty() ? 0 : z[0].nvars();
  std::vector<std::vector<MPoly>> mat(m, std::vector<MPoly>(m, MPoly(nv)));
  for (std::size_t j = 0; j < m; ++j) {
    SymVec wj;
    for (const Rat& c : w.basis()[j]) wj.push_back(MPoly::constant(nv, c));
    const SymVec img = symbolic_product(alg, z, wj);
    // Coordinates in the RREF basis are read off at the pivots.
    SymVec back(alg.dim(), MPoly(nv));
    for (std::size_t i = 0; i < m; ++i) {
      const MPoly& ci = img[w.pivots()[i]];
      mat[i][j] = ci;
      for (std::size_t k = 0; k < alg.dim(); ++k)
        if (sgn(w.basis()[i][k]) != 0) back[k] += w.basis()[i][k] * ci;
    }
    for (std::size_t k = 0; k < alg.dim(); ++k)
      if (!(back[k] == img[k])) throw PreconditionError("W is not invariant under ad_z");
    mat[j][j] -= MPoly::constant(nv, 1 - lambda);
  }
  return bareiss_determinant(std::move(mat), nv);
}

NuancedResult nuanced_axes(const Algebra& alg, const Axis& a, const SearchConfig& cfg) {
  if (!is_seress(a.law)) throw PreconditionError("nuanced search needs an axis of a Seress law");
  const Mat& gram = require_gram(alg);
  const Vec one = require_unit(alg);
  const std::size_t n = alg.dim();
  const Subspace& U = a.eigenspace(Rat(0));
  const auto& ub = U.basis();
  NuancedResult out;
  out.u_dim = U.dim();

  const Vec g1 = gram * one;
  Vec lin(ub.size());
  for (std::size_t i = 0; i < ub.size(); ++i) lin[i] = dot(g1, ub[i]);

  std::vector<std::optional<Rat>> rows;
  if (cfg.z_lengths) {
    for (const Rat& r : *cfg.z_lengths) rows.emplace_back(r);
  } else {
    rows.emplace_back(std::nullopt);
  }

  std::vector<Vec> zs;
  for (const auto& r : rows) {
    ZBranch br;
    br.z_length = r;
    std::vector<MPoly> extra;
    if (r) extra.push_back(MPoly::linear(lin, -*r));
    IdempotentResult res = idempotents_in_affine(alg, zero_vec(n), ub, extra, cfg.caps);
    const bool may_cut = r && std::find(cfg.determinant_rows.begin(), cfg.determinant_rows.end(), *r) != cfg.determinant_rows.end();
    if (res.status == SolveStatus::positive_dimensional && may_cut && !cfg.determinant_lambdas.empty()) {
      const SymVec zsym = affine_vector(zero_vec(n), ub);
      for (const Rat& lam : cfg.determinant_lambdas) {
        if (!a.law.contains(lam)) continue;
        extra.push_back(determinant_relation(alg, zsym, a.eigenspace(lam), lam));
      }
      br.used_determinant_relation = true;
      res = idempotents_in_affine(alg, zero_vec(n), ub, extra, cfg.caps);
    }
    br.status = res.status;
    br.zs = res.idempotents;
    if (res.status == SolveStatus::positive_dimensional) {
      br.basis = res.basis;
      out.complete = false;
    } else if (res.status == SolveStatus::needs_extension) {
      out.complete = false;
    }
    for (const Vec& z : res.idempotents)
      if (std::find(zs.begin(), zs.end(), z) == zs.end()) zs.push_back(z);
    out.branches.push_back(std::move(br));
  }
  if (cfg.include_zero_z && std::find(zs.begin(), zs.end(), zero_vec(n)) == zs.end()) {
    ZBranch br;
    br.zs = {zero_vec(n)};
    out.branches.push_back(std::move(br));
    zs.push_back(zero_vec(n));
  }

  for (auto& br : out.branches) {
    for (const Vec& z : br.zs) {
      const Subspace w1 = eigenspace(ad_matrix(alg, add(a.vector, z)), Rat(1));
      IdempotentResult inner = naive_idempotents(alg, w1, cfg.length, cfg.caps);
      if (inner.status != SolveStatus::finite) {
        ++br.unresolved_inner;
        out.complete = false;
      }
      append_unique_axes(out.axes, axes_from_idempotents(alg, inner, cfg.target_law));
    }
  }
  std::sort(out.axes.begin(), out.axes.end(), [](const Axis& x, const Axis& y) { return x.vector < y.vector; });
  return out;
}

}  // namespace axial
