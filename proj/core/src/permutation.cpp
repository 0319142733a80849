#include "axial/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "axial/error.hpp"
#include "axial/transposition.hpp"

namespace axial {

Permutation::Permutation(std::vector<std::size_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto i : img_) {
    if (i >= img_.size() || seen[i]) throw ValidationError("not a permutation");
    seen[i] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return Permutation(std::move(v));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::size_t> img(degree);
  std::iota(img.begin(), img.end(), std::size_t{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ValidationError("expected '(' in cycle notation '" + std::string(text) + "'");
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t v = 0;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (start == i || v == 0 || v > degree) throw ValidationError("bad point in cycle notation '" + std::string(text) + "'");
      if (used[v - 1]) throw ValidationError("repeated point in cycle notation '" + std::string(text) + "'");
      used[v - 1] = true;
      cyc.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

std::size_t Permutation::order() const {
  std::size_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, c.size());
  return o;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(c[k] + 1);
    }
    s += ")";
  }
  return s;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DimensionMismatch("permutation degrees differ");
  std::vector<std::size_t> r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.img_[q.img_[i]];
  return Permutation(std::move(r));
}

Permutation conjugate(const Permutation& h, const Permutation& g) { return g * h * g.inverse(); }

bool cycle_order_less(const Permutation& a, const Permutation& b) {
  std::vector<std::size_t> fa;
  std::vector<std::size_t> fb;
  for (const auto& c : a.cycles()) fa.insert(fa.end(), c.begin(), c.end());
  for (const auto& c : b.cycles()) fb.insert(fb.end(), c.begin(), c.end());
  return fa < fb;
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, std::size_t cap) {
  if (gens.empty()) return {};
  std::set<Permutation> seen{Permutation::identity(gens[0].degree())};
  std::deque<Permutation> todo{Permutation::identity(gens[0].degree())};
  std::vector<Permutation> out;
  while (!todo.empty()) {
    Permutation p = todo.front();
    todo.pop_front();
    out.push_back(p);
    for (const auto& g : gens) {
      Permutation q = g * p;
      if (seen.insert(q).second) {
        if (seen.size() > cap) throw SolverCapExceeded("group enumeration cap exceeded");
        todo.push_back(q);
      }
    }
  }
  return out;
}

std::size_t ThreeTranspositionData::index_of(const Permutation& p) const {
  for (std::size_t i = 0; i < D.size(); ++i)
    if (D[i] == p) return i;
  return npos;
}

ThreeTranspositionData make_three_transposition(const std::vector<Permutation>& generators,
                                                const Permutation& rep) {
  ThreeTranspositionData data;
  data.generators = generators;
  if (rep.order() != 2) throw PreconditionError("class representative is not an involution");
  std::set<Permutation> seen{rep};
  std::deque<Permutation> todo{rep};
  while (!todo.empty()) {
    Permutation c = todo.front();
    todo.pop_front();
    for (const auto& g : generators) {
      Permutation d = conjugate(c, g);
      if (seen.insert(d).second) todo.push_back(d);
    }
  }
  data.D.assign(seen.begin(), seen.end());
  std::sort(data.D.begin(), data.D.end(), cycle_order_less);
  const std::size_t n = data.D.size();
  data.order.assign(n, std::vector<int>(n, 1));
  data.third.assign(n, std::vector<std::size_t>(n, ThreeTranspositionData::npos));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t o = (data.D[i] * data.D[j]).order();
      if (o > 3) {
        throw PreconditionError("class is not of 3-transpositions: |cd| = " + std::to_string(o) + " for " +
                                data.D[i].to_string() + ", " + data.D[j].to_string());
      }
      data.order[i][j] = static_cast<int>(o);
      if (o == 3) data.third[i][j] = data.index_of(conjugate(data.D[i], data.D[j]));
    }
  }
  return data;
}

}  // namespace axial
