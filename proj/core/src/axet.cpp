#include "axial/axet.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "axial/error.hpp"

namespace axial {

std::optional<std::size_t> Axet::index_of(const Vec& v) const {
  for (std::size_t i = 0; i < axes.size(); ++i)
    if (axes[i].vector == v) return i;
  return std::nullopt;
}

Axis transport_axis(const Axis& a, const Mat& g, const Mat& g_inverse) {
  Axis b = a;
  const std::size_t n = g.rows();
  b.vector = g * a.vector;
  for (auto& part : b.eigen) {
    std::vector<Vec> imgs;
    for (const auto& x : part.space.basis()) imgs.push_back(g * x);
    part.space = Subspace::span(imgs, n);
  }
  b.miyamoto = g * a.miyamoto * g_inverse;
  if (a.sigma) b.sigma = g * *a.sigma * g_inverse;
  return b;
}

Axet close_axet(const std::vector<Axis>& seeds, std::size_t cap) {
  Axet out;
  for (const auto& s : seeds)
    if (!out.index_of(s.vector)) out.axes.push_back(s);
  // Every (axis, tau) pair is visited once; new axes bring new taus.
  std::size_t done = 0;
  for (std::size_t round = 0; done < out.axes.size() || round == 0; ++round) {
    const std::size_t upto = out.axes.size();
    for (std::size_t i = 0; i < upto; ++i) {
      for (std::size_t j = (i < done ? done : 0); j < upto; ++j) {
        const Mat& t = out.axes[j].miyamoto;
        const Vec w = t * out.axes[i].vector;
        if (out.index_of(w)) continue;
        if (out.axes.size() >= cap) throw SolverCapExceeded("axet closure cap exceeded");
        out.axes.push_back(transport_axis(out.axes[i], t, t));
      }
    }
    done = upto;
  }
  out.closed = true;
  return out;
}

namespace {

struct MatLess {
  bool operator()(const Mat& a, const Mat& b) const {
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        const int s = cmp(a(r, c), b(r, c));
        if (s != 0) return s < 0;
      }
    return false;
  }
};

std::vector<Mat> distinct_taus(const Axet& axet, std::size_t n) {
  std::vector<Mat> gens;
  const Mat id = Mat::identity(n);
  for (const auto& a : axet.axes) {
    if (a.miyamoto == id) continue;
    if (std::find(gens.begin(), gens.end(), a.miyamoto) == gens.end()) gens.push_back(a.miyamoto);
  }
  return gens;
}

std::vector<Rat> minus_values(const FusionLaw& law) { return c2_grading(law).minus; }

}  // namespace

MiyGroup miyamoto_group(const Algebra& alg, const Axet& axet, std::size_t cap) {
  const std::size_t n = alg.dim();
  MiyGroup g;
  g.generators = distinct_taus(axet, n);
  for (const auto& t : g.generators) {
    std::vector<std::size_t> img;
    for (const auto& a : axet.axes) {
      auto k = axet.index_of(t * a.vector);
      if (!k) throw PreconditionError("axet is not closed under its taus");
      img.push_back(*k);
    }
    g.generator_perms.emplace_back(std::move(img));
  }
  std::vector<Vec> vs;
  for (const auto& a : axet.axes) vs.push_back(a.vector);
  g.faithful = Subspace::span(vs, n).dim() == n;
  if (g.generators.empty()) {
    g.elements = {Permutation::identity(axet.axes.size())};
    g.matrices = {Mat::identity(n)};
    g.order = 1;
    return g;
  }
  if (g.faithful) {
    g.elements = generate_group(g.generator_perms, cap);
    g.order = g.elements.size();
    return g;
  }
  std::set<Mat, MatLess> seen{Mat::identity(n)};
  std::deque<Mat> todo{Mat::identity(n)};
  while (!todo.empty()) {
    Mat m = todo.front();
    todo.pop_front();
    g.matrices.push_back(m);
    for (const auto& t : g.generators) {
      Mat q = t * m;
      if (seen.insert(q).second) {
        if (seen.size() > cap) throw SolverCapExceeded("Miyamoto group enumeration cap exceeded");
        todo.push_back(std::move(q));
      }
    }
  }
  g.order = g.matrices.size();
  return g;
}

AxisSearchOutcome twins_of(const Algebra& alg, const Axis& a, const GroebnerCaps& caps) {
  const std::size_t n = alg.dim();
  Subspace minus(n);
  for (const Rat& lam : minus_values(a.law)) minus = sum(minus, a.eigenspace(lam));
  const Subspace ann = annihilator(alg, minus);
  IdempotentResult res = idempotents_in_affine(alg, a.vector, ann.basis(), {}, caps);
  AxisSearchOutcome out;
  out.status = res.status;
  if (res.status == SolveStatus::positive_dimensional) out.basis = res.basis;
  for (const Vec& b : res.idempotents) {
    if (b == a.vector) continue;
    AxisCheck c = check_axis(alg, b, a.law);
    if (c && c.axis->miyamoto == a.miyamoto) out.axes.push_back(std::move(*c.axis));
  }
  return out;
}

AxisSearchOutcome tau_realizer(const Algebra& alg, const Mat& tau, const FusionLaw& law, const GroebnerCaps& caps) {
  const std::size_t n = alg.dim();
  if (!(tau * tau == Mat::identity(n))) throw PreconditionError("tau is not an involution");
  if (!is_automorphism(alg, tau)) throw PreconditionError("tau is not an automorphism");
  const Vec one = require_unit(alg);
  const Subspace comm = column_space(tau - Mat::identity(n));
  const Subspace space = sum(annihilator(alg, comm), Subspace::span({one}, n));
  IdempotentResult res = naive_idempotents(alg, space, std::nullopt, caps);
  AxisSearchOutcome out;
  out.status = res.status;
  if (res.status == SolveStatus::positive_dimensional) out.basis = res.basis;
  for (const Vec& x : res.idempotents) {
    AxisCheck c = check_axis(alg, x, law);
    if (c && c.axis->miyamoto == tau) out.axes.push_back(std::move(*c.axis));
  }
  return out;
}

Subspace fixed_space(const MiyGroup& miy, std::size_t n) {
  Subspace f = Subspace::full(n);
  for (const auto& g : miy.generators) f = intersect(f, kernel(g - Mat::identity(n)));
  return f;
}

AxisSearchOutcome jordan_axes(const Algebra& alg, const MiyGroup& miy, const FusionLaw& law, const GroebnerCaps& caps) {
  const Grading gr = c2_grading(law);
  std::vector<Rat> alphas;
  for (const Rat& v : gr.plus)
    if (v != 0 && v != 1) alphas.push_back(v);
  if (alphas.size() != 1) throw PreconditionError("law " + law.name() + " has no single even eigenvalue besides 0 and 1");
  const FusionLaw jl = FusionLaw::jordan(alphas[0]);

  IdempotentResult res = naive_idempotents(alg, fixed_space(miy, alg.dim()), std::nullopt, caps);
  AxisSearchOutcome out;
  out.status = res.status;
  if (res.status == SolveStatus::positive_dimensional) out.basis = res.basis;
  for (const Vec& u : res.idempotents) {
    AxisCheck c = check_axis(alg, u, law);
    if (!c || !c.axis->tau_trivial()) continue;
    if (!check_axis(alg, u, jl)) continue;
    out.axes.push_back(std::move(*c.axis));
  }
  return out;
}

std::vector<PairRow> builtin_pair_rows() {
  auto row = [](std::string l, Rat len) {
    PairRow r;
    r.label = std::move(l);
    r.identity_length = std::move(len);
    r.zero_product = false;
    return r;
  };
  std::vector<PairRow> rows{row("2A", make_rat(12, 5)), row("2B", make_rat(2)),      row("3A", make_rat(116, 35)),
                            row("3C", make_rat(32, 11)), row("4A", make_rat(4)),      row("4B", make_rat(19, 5)),
                            row("5A", make_rat(32, 7)), row("6A", make_rat(51, 10))};
  rows[1].zero_product = true;
  return rows;
}

namespace {

template <class T>
bool field_matches(const std::optional<T>& want, const std::optional<T>& have) {
  return !want || (have && *want == *have);
}

}  // namespace

PairClass classify_pair(const Algebra& alg, const Axis& a, const Axis& b, const std::vector<PairRow>* reference) {
  if (a.vector == b.vector) throw PreconditionError("classify_pair needs two distinct axes");
  const std::size_t n = alg.dim();
  PairClass pc;
  const Subspace sub = subalgebra_closure(alg, {a.vector, b.vector});
  pc.dim = sub.dim();
  pc.zero_product = is_zero(product(alg, a.vector, b.vector));

  const Mat t = a.miyamoto * b.miyamoto;
  Mat p = t;
  for (std::size_t k = 1; k <= 64; ++k) {
    if (p == Mat::identity(n)) {
      pc.tau_order = k;
      break;
    }
    p = p * t;
  }

  if (alg.gram()) {
    pc.form = form_value(alg, a.vector, b.vector);
    try {
      if (auto u = unit_of_subalgebra(alg, sub)) pc.identity_length = form_value(alg, *u, *u);
    } catch (const PreconditionError&) {
    }
  }

  std::vector<PairRow> rows;
  if (reference) {
    rows = *reference;
  } else {
    const FusionLaw ns = FusionLaw::monster(make_rat(1, 4), make_rat(1, 32));
    if (a.law == ns && b.law == ns) {
      rows = builtin_pair_rows();
    } else {
      PairRow r;
      r.label = "2B";
      r.zero_product = true;
      rows.push_back(r);
    }
  }
  std::optional<std::size_t> dim = pc.dim, ord;
  if (pc.tau_order) ord = pc.tau_order;
  std::optional<bool> zp = pc.zero_product;
  for (const auto& r : rows) {
    if (field_matches(r.dim, dim) && field_matches(r.tau_order, ord) && field_matches(r.form, pc.form) &&
        field_matches(r.identity_length, pc.identity_length) && field_matches(r.zero_product, zp))
      pc.candidates.push_back(r.label);
  }
  if (pc.candidates.size() == 1) pc.label = pc.candidates.front();
  return pc;
}

namespace {

struct AutSearch {
  const Algebra& alg;
  const Axet& axet;
  std::vector<std::size_t> basis_idx;  // spanning subset
  std::vector<std::string> signature;
  std::vector<std::vector<std::string>> pair_key;
  Mat basis_inverse;
  std::vector<std::size_t> image;
  std::vector<bool> used;
  AutomorphismGroup result;

  void run(std::size_t k) {
    const std::size_t m = axet.axes.size();
    if (k == basis_idx.size()) {
      finish();
      return;
    }
    const std::size_t src = basis_idx[k];
    for (std::size_t t = 0; t < m; ++t) {
      if (used[t] || signature[t] != signature[src]) continue;
      bool ok = true;
      for (std::size_t l = 0; l < k && ok; ++l) ok = pair_key[basis_idx[l]][src] == pair_key[image[l]][t];
      if (!ok) continue;
      used[t] = true;
      image.push_back(t);
      run(k + 1);
      image.pop_back();
      used[t] = false;
    }
  }

  void finish() {
    const std::size_t n = alg.dim();
    std::vector<Vec> cols;
    for (std::size_t t : image) cols.push_back(axet.axes[t].vector);
    const Mat g = Mat::from_cols(cols, n) * basis_inverse;
    ++result.candidates_tried;
    std::vector<std::size_t> perm;
    std::vector<bool> hit(axet.axes.size(), false);
    for (const auto& a : axet.axes) {
      auto j = axet.index_of(g * a.vector);
      if (!j || hit[*j]) return;
      hit[*j] = true;
      perm.push_back(*j);
    }
    if (!is_automorphism(alg, g)) return;
    result.elements.push_back(g);
    result.on_axes.emplace_back(std::move(perm));
  }
};

}  // namespace

AutomorphismGroup aut_from_axis_permutations(const Algebra& alg, const Axet& axet) {
  const std::size_t n = alg.dim();
  const std::size_t m = axet.axes.size();
  AutSearch s{alg, axet, {}, {}, {}, {}, {}, std::vector<bool>(m, false), {}};

  Subspace span(n);
  for (std::size_t i = 0; i < m && span.dim() < n; ++i) {
    if (span.contains(axet.axes[i].vector)) continue;
    span = sum(span, Subspace::span({axet.axes[i].vector}, n));
    s.basis_idx.push_back(i);
  }
  if (span.dim() < n) throw PreconditionError("axet does not span the algebra");
  std::vector<Vec> cols;
  for (std::size_t i : s.basis_idx) cols.push_back(axet.axes[i].vector);
  s.basis_inverse = *inverse(Mat::from_cols(cols, n));

  const bool has_form = alg.gram().has_value();
  s.pair_key.assign(m, std::vector<std::string>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::string key = is_zero(product(alg, axet.axes[i].vector, axet.axes[j].vector)) ? "0" : "*";
      if (has_form) key += ":" + to_string(form_value(alg, axet.axes[i].vector, axet.axes[j].vector));
      s.pair_key[i][j] = std::move(key);
    }
  for (std::size_t i = 0; i < m; ++i) {
    const Axis& a = axet.axes[i];
    std::string sig = a.law.name();
    for (const auto& p : a.eigen) sig += "|" + std::to_string(p.space.dim());
    std::vector<std::string> row = s.pair_key[i];
    std::sort(row.begin(), row.end());
    for (const auto& k : row) sig += ";" + k;
    s.signature.push_back(std::move(sig));
  }

  s.run(0);
  AutomorphismGroup& r = s.result;
  std::vector<std::size_t> order(r.elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return r.on_axes[x] < r.on_axes[y]; });
  AutomorphismGroup sorted;
  sorted.candidates_tried = r.candidates_tried;
  for (std::size_t i : order) {
    sorted.elements.push_back(r.elements[i]);
    sorted.on_axes.push_back(r.on_axes[i]);
  }
  return sorted;
}

}  // namespace axial
