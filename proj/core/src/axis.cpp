#include "axial/axis.hpp"

#include <algorithm>

#include "axial/error.hpp"

namespace axial {

const char* to_string(AxisFailure f) {
  switch (f) {
    case AxisFailure::none: return "ok";
    case AxisFailure::zero_vector: return "zero vector";
    case AxisFailure::not_idempotent: return "not idempotent";
    case AxisFailure::not_semisimple: return "adjoint not semisimple";
    case AxisFailure::bad_spectrum: return "spectrum outside the law";
    case AxisFailure::fusion_violation: return "fusion law violated";
    case AxisFailure::not_primitive: return "not primitive";
  }
  return "?";
}

const Subspace& Axis::eigenspace(const Rat& lambda) const {
  for (const auto& p : eigen)
    if (p.lambda == lambda) return p.space;
  throw PreconditionError("eigenvalue " + axial::to_string(lambda) + " is not in the axis law");
}

bool Axis::tau_trivial() const { return miyamoto == Mat::identity(vector.size()); }

namespace {

// E diag(signs) E^-1 where E stacks eigenbases in order.
Mat signed_involution(const std::vector<EigenPart>& parts, FusionLaw::Mask minus, std::size_t n) {
  std::vector<Vec> cols;
  Vec signs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& b : parts[i].space.basis()) {
      cols.push_back(b);
      signs.push_back((minus >> i & 1) ? Rat(-1) : Rat(1));
    }
  }
  if (minus == 0) return Mat::identity(n);
  const Mat e = Mat::from_cols(cols, n);
  return e * Mat::diagonal(signs) * *inverse(e);
}

AxisCheck fail(AxisFailure r, std::string detail) {
  AxisCheck c;
  c.reason = r;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

AxisCheck check_axis(const Algebra& alg, const Vec& v, const FusionLaw& law, bool require_primitive) {
  const std::size_t n = alg.dim();
  if (v.size() != n) throw DimensionMismatch("axis candidate length");
  if (is_zero(v)) return fail(AxisFailure::zero_vector, "");
  if (product(alg, v, v) != v) return fail(AxisFailure::not_idempotent, "");
  const Mat ad = ad_matrix(alg, v);
  const Spectrum spec = semisimple_spectrum(ad);
  if (spec.irrational) return fail(AxisFailure::bad_spectrum, "characteristic polynomial has non-rational roots");
  if (!spec.semisimple) return fail(AxisFailure::not_semisimple, "eigenspace defect " + std::to_string(spec.defect));
  for (const auto& p : spec.parts) {
    if (!law.contains(p.lambda)) return fail(AxisFailure::bad_spectrum, "eigenvalue " + to_string(p.lambda));
  }

  Axis ax;
  ax.vector = v;
  ax.law = law;
  FusionLaw::Mask occurring = 0;
  for (std::size_t i = 0; i < law.size(); ++i) {
    Subspace s(n);
    for (const auto& p : spec.parts)
      if (p.lambda == law.values()[i]) s = p.space;
    if (s.dim() > 0) occurring |= FusionLaw::Mask{1} << i;
    ax.eigen.push_back({law.values()[i], std::move(s)});
  }

  for (std::size_t i = 0; i < law.size(); ++i) {
    for (std::size_t j = i; j < law.size(); ++j) {
      if (!(occurring >> i & 1) || !(occurring >> j & 1)) continue;
      std::vector<Vec> target;
      const FusionLaw::Mask m = law.star(i, j);
      for (std::size_t k = 0; k < law.size(); ++k)
        if (m >> k & 1) target.insert(target.end(), ax.eigen[k].space.basis().begin(), ax.eigen[k].space.basis().end());
      const Subspace t = Subspace::span(target, n);
      for (const auto& x : ax.eigen[i].space.basis()) {
        for (const auto& y : ax.eigen[j].space.basis()) {
          if (!t.contains(product(alg, x, y))) {
            return fail(AxisFailure::fusion_violation,
                        to_string(law.values()[i]) + " * " + to_string(law.values()[j]));
          }
        }
      }
    }
  }

  ax.primitive = ax.eigenspace(Rat(1)).dim() == 1;
  if (require_primitive && !ax.primitive) {
    return fail(AxisFailure::not_primitive, "dim A_1 = " + std::to_string(ax.eigenspace(Rat(1)).dim()));
  }

  const Grading g = c2_grading(law);
  ax.miyamoto = signed_involution(ax.eigen, g.minus_mask, n);
  if ((g.minus_mask & occurring) == 0) {
    // Rebuild the grading on the occurring values only.
    const FusionLaw sub = law.restricted(occurring);
    const Grading gs = c2_grading(sub);
    if (gs.nontrivial()) {
      FusionLaw::Mask minus = 0;
      for (const Rat& r : gs.minus) minus |= FusionLaw::Mask{1} << *law.index_of(r);
      ax.sigma = signed_involution(ax.eigen, minus, n);
    }
  }
  AxisCheck ok;
  ok.axis = std::move(ax);
  return ok;
}

const Mat& miyamoto_involution(const Axis& ax) { return ax.miyamoto; }

Subspace derivation_space(const Algebra& alg) {
  const std::size_t n = alg.dim();
  const std::size_t nn = n * n;
  std::vector<Vec> rows;
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec row = zero_vec(nn);
        // D(e_i e_j)_k
        for (const auto& [m, g] : alg.constants(i, j)) row[var(k, m)] += g;
        // -(D e_i) e_j - e_i (D e_j), coefficient of e_k
        for (std::size_t r = 0; r < n; ++r) {
          for (const auto& [m, g] : alg.constants(r, j))
            if (m == k) row[var(r, i)] -= g;
          for (const auto& [m, g] : alg.constants(i, r))
            if (m == k) row[var(r, j)] -= g;
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return Subspace::full(nn);
  return kernel(Mat::from_rows(rows));
}

Mat unflatten(const Vec& v, std::size_t n) {
  if (v.size() != n * n) throw DimensionMismatch("flattened matrix length");
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  return m;
}

std::optional<FusionLaw> infer_fusion_law(const Algebra& alg, const Vec& v) {
  const std::size_t n = alg.dim();
  if (is_zero(v) || product(alg, v, v) != v) return std::nullopt;
  const Spectrum spec = semisimple_spectrum(ad_matrix(alg, v));
  if (!spec.semisimple) return std::nullopt;
  std::vector<EigenPart> parts = spec.parts;
  std::stable_sort(parts.begin(), parts.end(), [](const EigenPart& a, const EigenPart& b) {
    auto rank = [](const Rat& x) { return x == 1 ? 0 : (sgn(x) == 0 ? 1 : 2); };
    if (rank(a.lambda) != rank(b.lambda)) return rank(a.lambda) < rank(b.lambda);
    return a.lambda < b.lambda;
  });
  std::vector<Vec> cols;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& b : parts[i].space.basis()) {
      cols.push_back(b);
      owner.push_back(i);
    }
  }
  const Mat einv = *inverse(Mat::from_cols(cols, n));
  const std::size_t k = parts.size();
  std::vector<std::vector<std::vector<Rat>>> table(k, std::vector<std::vector<Rat>>(k));
  std::vector<Rat> values;
  for (const auto& p : parts) values.push_back(p.lambda);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      std::vector<bool> hit(k, false);
      for (const auto& x : parts[i].space.basis()) {
        for (const auto& y : parts[j].space.basis()) {
          const Vec c = einv * product(alg, x, y);
          for (std::size_t t = 0; t < n; ++t)
            if (sgn(c[t]) != 0) hit[owner[t]] = true;
        }
      }
      for (std::size_t t = 0; t < k; ++t)
        if (hit[t]) table[i][j].push_back(values[t]);
      table[j][i] = table[i][j];
    }
  }
  try {
    return FusionLaw(values, table, "inferred");
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

bool associates(const Algebra& alg, const Vec& a, const Vec& w, const Vec& v) {
  return product(alg, a, product(alg, w, v)) == product(alg, product(alg, a, w), v);
}

}  // namespace axial
