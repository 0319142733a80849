#include <benchmark/benchmark.h>

#include <random>

#include "axial/axis.hpp"
#include "axial/groebner.hpp"
#include "axial/matsuo.hpp"
#include "axial/search.hpp"
#include "axial/transposition.hpp"

using namespace axial;

namespace {

ThreeTranspositionData symmetric(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < n; ++i)
    gens.push_back(Permutation::parse_cycles("(" + std::to_string(i) + "," + std::to_string(i + 1) + ")", n));
  return make_three_transposition(gens, Permutation::parse_cycles("(1,2)", n));
}

Mat random_mat(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> c(-9, 9);
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = make_rat(c(rng), 1 + (i + j) % 4);
  return m;
}

Algebra random_algebra(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> c(-2, 2);
  AlgebraBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) b.set_constant(i, j, k, Rat(c(rng)));
  return b.build();
}

void BM_Rref(benchmark::State& state) {
  const Mat m = random_mat(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_BuchbergerIdempotents(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Algebra a = random_algebra(n, 20261014);
  std::vector<Vec> dirs;
  for (std::size_t i = 0; i < n; ++i) dirs.push_back(unit_vec(n, i));
  const auto eqs = idempotent_equations(a, affine_vector(zero_vec(n), dirs));
  for (auto _ : state) benchmark::DoNotOptimize(solve_system(eqs, n));
}
BENCHMARK(BM_BuchbergerIdempotents)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DiagonalIdempotents(benchmark::State& state) {
  const Algebra a = field_power(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(naive_idempotents(a));
}
BENCHMARK(BM_DiagonalIdempotents)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_CheckAxis(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Algebra m = matsuo_algebra(symmetric(n), make_rat(1, 4));
  const FusionLaw law = FusionLaw::jordan(make_rat(1, 4));
  const Vec a = unit_vec(m.dim(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(check_axis(m, a, law));
}
BENCHMARK(BM_CheckAxis)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_FlipQ2(benchmark::State& state) {
  const ThreeTranspositionData s4 = symmetric(4);
  const Permutation sigma = Permutation::parse_cycles("(1,2)(3,4)", 4);
  for (auto _ : state) benchmark::DoNotOptimize(double_axes_and_flip(s4, make_rat(1, 4), sigma));
}
BENCHMARK(BM_FlipQ2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
