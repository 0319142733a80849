#include "axial/matsuo.hpp"

#include "axial/error.hpp"

namespace axial {

Algebra matsuo_algebra(const ThreeTranspositionData& data, const Rat& eta) {
  if (sgn(eta) == 0 || eta == 1) throw PreconditionError("Matsuo parameter must differ from 0 and 1");
  const std::size_t n = data.D.size();
  AlgebraBuilder b(n);
  Mat gram(n, n);
  const Rat half_eta = eta / 2;
  for (std::size_t i = 0; i < n; ++i) {
    gram(i, i) = 1;
    b.set_constant(i, i, i, Rat(1));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (data.order[i][j] != 3) continue;
      const std::size_t e = data.third[i][j];
      Vec v = zero_vec(n);
      v[i] += half_eta;
      v[j] += half_eta;
      v[e] -= half_eta;
      b.set_product(i, j, v);
      gram(i, j) = gram(j, i) = half_eta;
    }
  }
  std::vector<std::string> labels;
  for (const auto& c : data.D) labels.push_back(c.to_string());
  b.set_labels(std::move(labels)).set_gram(gram);
  Algebra a = b.build();
  if (auto u = find_unit(a)) {
    b.set_unit(*u);
    a = b.build();
  }
  return a;
}

FlipResult double_axes_and_flip(const ThreeTranspositionData& data, const Rat& eta, const Permutation& sigma) {
  const std::size_t n = data.D.size();
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    img[i] = data.index_of(conjugate(data.D[i], sigma));
    if (img[i] == ThreeTranspositionData::npos) throw PreconditionError("sigma does not preserve D");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (img[img[i]] != i) throw PreconditionError("sigma does not act on D as an involution");
  }

  FlipResult out;
  out.matsuo = matsuo_algebra(data, eta);
  for (std::size_t i = 0; i < n; ++i) {
    if (img[i] == i) {
      out.generators.push_back({FlipKind::single, i, i});
      out.ambient_basis.push_back(unit_vec(n, i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = img[i];
    if (j <= i || data.order[i][j] != 2) continue;
    out.generators.push_back({FlipKind::double_axis, i, j});
    Vec v = unit_vec(n, i);
    v[j] = 1;
    out.ambient_basis.push_back(std::move(v));
  }

  std::vector<std::string> labels;
  std::size_t ns = 0;
  std::size_t nd = 0;
  for (const auto& g : out.generators) {
    labels.push_back(g.kind == FlipKind::single ? "s" + std::to_string(++ns) : "d" + std::to_string(++nd));
  }
  const Subspace closure = subalgebra_closure(out.matsuo, out.ambient_basis);
  Subspace have = Subspace::span(out.ambient_basis, n);
  std::size_t nx = 0;
  for (const auto& v : closure.basis()) {
    if (have.contains(v)) continue;
    out.ambient_basis.push_back(v);
    out.generators.push_back({FlipKind::extra, 0, 0});
    labels.push_back("x" + std::to_string(++nx));
    have = Subspace::span(out.ambient_basis, n);
  }
  out.algebra = restrict_to(out.matsuo, out.ambient_basis, std::move(labels));
  return out;
}

}  // namespace axial
