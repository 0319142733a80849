#include "axial/decompose.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <random>

#include "axial/error.hpp"

namespace axial {

std::string key_string(const EigenKey& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + to_string(k[i]);
  return s + ")";
}

namespace {

void split(const std::vector<Axis>& Y, std::size_t depth, const Subspace& cur, EigenKey& key,
           JointDecomposition& out) {
  if (depth == Y.size()) {
    out.components.emplace(key, cur);
    return;
  }
  const auto& parts = Y[depth].eigen;
  for (const auto& p : parts) {
    Subspace next = intersect(cur, p.space);
    if (next.dim() == 0) {
      std::size_t skipped = 1;
      for (std::size_t d = depth + 1; d < Y.size(); ++d) skipped *= Y[d].eigen.size();
      out.empty_keys += skipped;
      continue;
    }
    key.push_back(p.lambda);
    split(Y, depth + 1, next, key, out);
    key.pop_back();
  }
}

bool nondegenerate_on(const Mat& gram, const Subspace& s) {
  if (s.dim() == 0) return true;
  const Mat b = s.basis_matrix();
  return determinant(b.transpose() * gram * b) != 0;
}

}  // namespace

JointDecomposition decompose_joint(const Algebra& alg, const std::vector<Axis>& Y) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < Y.size(); ++i)
    for (std::size_t j = 0; j < Y.size(); ++j)
      if (i != j && Y[i].miyamoto * Y[j].vector != Y[j].vector)
        throw PreconditionError("tau of axis " + std::to_string(i + 1) + " moves axis " + std::to_string(j + 1));

  JointDecomposition d;
  d.Y = Y;
  d.U = Subspace(n);
  d.a_circ = Subspace(n);
  EigenKey key;
  split(Y, 0, Subspace::full(n), key, d);
  d.seress = std::all_of(Y.begin(), Y.end(), [](const Axis& a) { return is_seress(a.law); });
  const EigenKey zero(Y.size(), Rat(0));
  if (auto it = d.components.find(zero); it != d.components.end()) d.U = it->second;
  d.u_subalgebra = is_subalgebra(alg, d.U);
  for (const auto& [k, w] : d.components) {
    d.a_circ = sum(d.a_circ, w);
    if (!is_module(alg, d.U, w)) d.module_failures.push_back(k);
  }
  d.complete = d.a_circ.dim() == n;
  return d;
}

JointDecomposition partial_decomposition(const Algebra& alg, const std::vector<Axis>& Y) {
  const Mat& gram = require_gram(alg);
  JointDecomposition d = decompose_joint(alg, Y);
  if (!nondegenerate_on(gram, d.a_circ)) throw PreconditionError("the form is degenerate on the sum of the components");
  d.a_sharp = perp_space(d.a_circ, gram);
  d.sharp_module = is_module(alg, d.U, *d.a_sharp);
  return d;
}

Subspace complement_in(const Algebra& alg, const Subspace& outer, const Subspace& inner) {
  const Mat& gram = require_gram(alg);
  if (!outer.contains(inner)) throw PreconditionError("inner subspace is not contained in outer");
  if (!nondegenerate_on(gram, inner)) throw PreconditionError("the form is degenerate on the inner subspace");
  return intersect(outer, perp_space(inner, gram));
}

bool ExtensionSpace::contains(const Mat& psi) const {
  const std::size_t m = psi.rows();
  std::vector<Vec> flat;
  auto flatten = [m](const Mat& x) {
    Vec v(m * m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) v[r * m + c] = x(r, c);
    return v;
  };
  for (const auto& s : solutions) flat.push_back(flatten(s));
  return Subspace::span(flat, m * m).contains(flatten(psi));
}

ExtensionSpace extension_space(const Algebra& alg, const Subspace& U, const Subspace& W, const Mat& phi) {
  const std::size_t n = alg.dim();
  const std::size_t l = U.dim(), m = W.dim();
  if (phi.rows() != l || phi.cols() != l) throw DimensionMismatch("phi must be dim U x dim U");
  if (!is_module(alg, U, W)) throw PreconditionError("W is not a U-module");
  const auto& ub = U.basis();
  const auto& wb = W.basis();

  std::vector<Vec> uphi;
  for (std::size_t i = 0; i < l; ++i) {
    Vec x = zero_vec(n);
    for (std::size_t k = 0; k < l; ++k) axpy(x, phi(k, i), ub[k]);
    uphi.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i; j < l; ++j) {
      const Vec p = product(alg, ub[i], ub[j]);
      if (!U.contains(p)) throw PreconditionError("U is not a subalgebra");
      const Vec c = U.coordinates(p);
      Vec img = zero_vec(n);
      for (std::size_t k = 0; k < l; ++k) axpy(img, c[k], uphi[k]);
      if (img != product(alg, uphi[i], uphi[j])) throw PreconditionError("phi is not an automorphism of U");
    }

  ExtensionSpace out;
  out.phi = phi;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<Vec> act(m), plain(m);
    for (std::size_t t = 0; t < m; ++t) {
      act[t] = W.coordinates(product(alg, uphi[i], wb[t]));
      plain[t] = W.coordinates(product(alg, ub[i], wb[t]));
    }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < m; ++r) {
        Vec row = zero_vec(m * m);
        for (std::size_t t = 0; t < m; ++t) {
          row[t * m + j] += act[t][r];
          row[r * m + t] -= plain[j][t];
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  const Subspace sol = rows.empty() ? Subspace::full(m * m) : kernel(Mat::from_rows(rows));
  for (const auto& v : sol.basis()) out.solutions.push_back(unflatten(v, m));
  return out;
}

namespace {

struct Expr {
  std::string leaf;  // "u" or "w<i>" when a leaf
  std::unique_ptr<Expr> left, right;
};

class ProbeParser {
 public:
  explicit ProbeParser(std::string_view s) : s_(s) {}

  std::pair<std::unique_ptr<Expr>, std::unique_ptr<Expr>> pairing() {
    auto a = product();
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '.') fail("expected '.'");
    ++pos_;
    auto b = product();
    skip();
    if (pos_ != s_.size()) fail("trailing text");
    return {std::move(a), std::move(b)};
  }

 private:
  std::unique_ptr<Expr> product() {
    auto e = atom();
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        auto p = std::make_unique<Expr>();
        p->left = std::move(e);
        p->right = atom();
        e = std::move(p);
      } else {
        return e;
      }
    }
  }

  std::unique_ptr<Expr> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (s_[pos_] == '(') {
      ++pos_;
      auto e = product();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    auto e = std::make_unique<Expr>();
    if (s_[pos_] == 'u') {
      e->leaf = "u";
      ++pos_;
      return e;
    }
    if (s_[pos_] == 'w') {
      std::size_t q = pos_ + 1;
      while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
      if (q == pos_ + 1) fail("w needs an index");
      e->leaf = std::string(s_.substr(pos_, q - pos_));
      pos_ = q;
      return e;
    }
    fail("unexpected character");
    return nullptr;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw PreconditionError("probe '" + std::string(s_) + "': " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void collect_leaves(const Expr& e, std::map<std::string, int>& count) {
  if (!e.leaf.empty()) {
    ++count[e.leaf];
    return;
  }
  collect_leaves(*e.left, count);
  collect_leaves(*e.right, count);
}

Vec evaluate(const Algebra& alg, const Expr& e, const std::map<std::string, Vec>& draws) {
  if (!e.leaf.empty()) return draws.at(e.leaf);
  return product(alg, evaluate(alg, *e.left, draws), evaluate(alg, *e.right, draws));
}

Vec draw(const Subspace& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    Vec x = zero_vec(s.ambient());
    for (const auto& b : s.basis()) axpy(x, Rat(coef(rng)), b);
    if (!is_zero(x) || s.dim() == 0) return x;
  }
}

}  // namespace

SignKernel sign_kernel(const Algebra& alg, const Subspace& U, const std::vector<Subspace>& components,
                       const std::vector<Probe>& probes, std::uint64_t seed, std::size_t retries) {
  require_gram(alg);
  const std::size_t k = components.size();
  std::mt19937_64 rng(seed);
  SignKernel out;
  out.square_forced.assign(k, false);
  std::vector<std::vector<int>> relations;

  for (const auto& probe : probes) {
    auto [lhs, rhs] = ProbeParser(probe.text).pairing();
    std::map<std::string, int> count;
    collect_leaves(*lhs, count);
    collect_leaves(*rhs, count);
    ProbeRecord rec;
    rec.text = probe.text;
    rec.exponent.assign(k, 0);
    std::vector<int> raw(k, 0);
    for (const auto& [leaf, c] : count) {
      if (leaf == "u") continue;
      const std::size_t i = std::stoul(leaf.substr(1));
      if (i == 0 || i > k) throw PreconditionError("probe '" + probe.text + "' names missing component " + leaf);
      raw[i - 1] = c;
      rec.exponent[i - 1] = c % 2;
    }
    rec.square = std::all_of(rec.exponent.begin(), rec.exponent.end(), [](int e) { return e == 0; });
    for (std::size_t attempt = 0; attempt <= retries && !rec.nonzero; ++attempt) {
      rec.draws.clear();
      for (const auto& [leaf, c] : count)
        rec.draws[leaf] = draw(leaf == "u" ? U : components[std::stoul(leaf.substr(1)) - 1], rng);
      rec.attempts = attempt + 1;
      rec.value = form_value(alg, evaluate(alg, *lhs, rec.draws), evaluate(alg, *rhs, rec.draws));
      rec.nonzero = rec.value != 0;
    }
    if (rec.nonzero) {
      relations.push_back(rec.exponent);
      std::size_t nonzero_raw = 0, which = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (raw[i] != 0) ++nonzero_raw, which = i;
      if (nonzero_raw == 1 && raw[which] == 2) out.square_forced[which] = true;
    }
    out.records.push_back(std::move(rec));
  }

  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    // bit i set means mu_i = -1
    bool ok = true;
    for (const auto& rel : relations) {
      int parity = 0;
      for (std::size_t i = 0; i < k; ++i) parity ^= rel[i] & static_cast<int>(mask >> i & 1);
      if (parity) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<int> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = (mask >> i & 1) ? -1 : 1;
    out.tuples.push_back(std::move(t));
  }
  std::sort(out.tuples.begin(), out.tuples.end(), std::greater<>());
  return out;
}

}  // namespace axial
