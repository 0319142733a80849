#include "axial/fusion.hpp"

#include <algorithm>

#include "axial/error.hpp"

namespace axial {

FusionLaw::FusionLaw(std::vector<Rat> values, const std::vector<std::vector<std::vector<Rat>>>& table, std::string name)
    : values_(std::move(values)), name_(std::move(name)) {
  const std::size_t k = values_.size();
  if (k == 0 || k > 64) throw ValidationError("fusion law needs between 1 and 64 values");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (values_[i] == values_[j]) throw ValidationError("repeated fusion law value " + to_string(values_[i]));
  if (!index_of(Rat(1))) throw ValidationError("fusion law must contain 1");
  if (table.size() != k) throw ValidationError("fusion table size mismatch");
  star_.assign(k, std::vector<Mask>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    if (table[i].size() != k) throw ValidationError("fusion table size mismatch");
    for (std::size_t j = 0; j < k; ++j) {
      for (const Rat& v : table[i][j]) {
        auto idx = index_of(v);
        if (!idx) throw ValidationError("fusion product names unknown value " + to_string(v));
        star_[i][j] |= Mask{1} << *idx;
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (star_[i][j] != star_[j][i]) {
        throw ValidationError("fusion table is not symmetric at " + to_string(values_[i]) + ", " + to_string(values_[j]));
      }
  const std::size_t one = *index_of(Rat(1));
  for (std::size_t j = 0; j < k; ++j) {
    const Mask want = sgn(values_[j]) == 0 ? Mask{0} : Mask{1} << j;
    if (star_[one][j] != want) {
      throw ValidationError("fusion law must have 1 * " + to_string(values_[j]) +
                            (sgn(values_[j]) == 0 ? " empty" : " = {" + to_string(values_[j]) + "}"));
    }
  }
}

namespace {

using Table = std::vector<std::vector<std::vector<Rat>>>;

}  // namespace

FusionLaw FusionLaw::jordan(const Rat& eta) {
  if (sgn(eta) == 0 || eta == 1) throw PreconditionError("Jordan type parameter must differ from 0 and 1");
  // values 1, 0, eta
  Table t(3, std::vector<std::vector<Rat>>(3));
  const Rat one(1), zero(0);
  t[0][0] = {one};
  t[0][1] = t[1][0] = {};
  t[0][2] = t[2][0] = {eta};
  t[1][1] = {zero};
  t[1][2] = t[2][1] = {eta};
  t[2][2] = {one, zero};
  return FusionLaw({one, zero, eta}, t, "j:" + to_string(eta));
}

FusionLaw FusionLaw::monster(const Rat& alpha, const Rat& beta) {
  const Rat one(1), zero(0);
  if (alpha == beta || sgn(alpha) == 0 || sgn(beta) == 0 || alpha == 1 || beta == 1) {
    throw PreconditionError("Monster type parameters must be distinct and differ from 0 and 1");
  }
  Table t(4, std::vector<std::vector<Rat>>(4));
  t[0][0] = {one};
  t[0][2] = t[2][0] = {alpha};
  t[0][3] = t[3][0] = {beta};
  t[1][1] = {zero};
  t[1][2] = t[2][1] = {alpha};
  t[1][3] = t[3][1] = {beta};
  t[2][2] = {one, zero};
  t[2][3] = t[3][2] = {beta};
  t[3][3] = {one, zero, alpha};
  return FusionLaw({one, zero, alpha, beta}, t, "m:" + to_string(alpha) + ":" + to_string(beta));
}

FusionLaw FusionLaw::associative() {
  Table t(2, std::vector<std::vector<Rat>>(2));
  t[0][0] = {Rat(1)};
  t[1][1] = {Rat(0)};
  return FusionLaw({Rat(1), Rat(0)}, t, "assoc");
}

std::optional<std::size_t> FusionLaw::index_of(const Rat& v) const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] == v) return i;
  return std::nullopt;
}

std::vector<Rat> FusionLaw::mask_values(Mask m) const {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (m >> i & 1) out.push_back(values_[i]);
  return out;
}

std::vector<Rat> FusionLaw::star_values(const Rat& a, const Rat& b) const {
  auto i = index_of(a);
  auto j = index_of(b);
  if (!i || !j) throw PreconditionError("value not in fusion law");
  return mask_values(star_[*i][*j]);
}

FusionLaw FusionLaw::restricted(Mask keep) const {
  std::vector<Rat> vals;
  std::vector<std::size_t> src;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (keep >> i & 1) {
      vals.push_back(values_[i]);
      src.push_back(i);
    }
  }
  Table t(vals.size(), std::vector<std::vector<Rat>>(vals.size()));
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = 0; b < src.size(); ++b) t[a][b] = mask_values(star_[src[a]][src[b]] & keep);
  return FusionLaw(vals, t, name_.empty() ? "" : name_ + "|restricted");
}

bool is_seress(const FusionLaw& law) {
  auto z = law.index_of(Rat(0));
  if (!z) return false;
  for (std::size_t j = 0; j < law.size(); ++j) {
    if ((law.star(*z, j) & ~(FusionLaw::Mask{1} << j)) != 0) return false;
  }
  return true;
}

Grading c2_grading(const FusionLaw& law) {
  const std::size_t k = law.size();
  const std::size_t one = *law.index_of(Rat(1));
  using Mask = FusionLaw::Mask;
  Mask best = 0;
  int best_count = 0;
  const Mask all = k == 64 ? ~Mask{0} : (Mask{1} << k) - 1;
  // Enumerate minus parts; feasible for the small laws in practice.
  if (k <= 20) {
    for (Mask minus = 1; minus <= all; ++minus) {
      if (minus >> one & 1) continue;
      const Mask plus = all & ~minus;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        for (std::size_t j = 0; j < k && ok; ++j) {
          const bool mi = minus >> i & 1;
          const bool mj = minus >> j & 1;
          const Mask s = law.star(i, j);
          ok = (mi == mj) ? (s & ~plus) == 0 : (s & ~minus) == 0;
        }
      }
      const int cnt = __builtin_popcountll(minus);
      if (ok && cnt > best_count) {
        best = minus;
        best_count = cnt;
      }
    }
  }
  Grading g;
  g.minus_mask = best;
  for (std::size_t i = 0; i < k; ++i) (best >> i & 1 ? g.minus : g.plus).push_back(law.values()[i]);
  return g;
}

std::string describe(const FusionLaw& law) {
  std::string s = law.name().empty() ? "custom" : law.name();
  s += " {";
  for (std::size_t i = 0; i < law.size(); ++i) {
    if (i) s += ", ";
    s += to_string(law.values()[i]);
  }
  return s + "}";
}

}  // namespace axial
