#include "lagrangelab/families.hpp"
#include "lagrangelab/normal_forms.hpp"
#include "lagrangelab/polytope.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace lagrangelab;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Regular m-gon style polytope: normals around the unit circle, offsets 1.
PolytopePresentation polygon(std::size_t m) {
  PolytopePresentation p;
  p.normals = IntMatrix(2, m);
  const long r = static_cast<long>(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double a = 2 * 3.141592653589793 * static_cast<double>(i) / static_cast<double>(m);
    p.normals(0, i) = static_cast<long>(std::lround(r * std::cos(a)));
    p.normals(1, i) = static_cast<long>(std::lround(r * std::sin(a)));
  }
  p.offsets.assign(m, Rational(r));
  return p;
}

}  // namespace

static void BM_Hnf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = random_matrix(n, n + 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_Hnf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_Snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = random_matrix(n, n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8)->Arg(16);

static void BM_VertexEnumeration(benchmark::State& state) {
  PolytopePresentation p = polygon(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VertexEnumeration)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_ReproduceTh4(benchmark::State& state) {
  ParamPoint pt{{"p", state.range(0)}, {"q", 2}};
  auto inst = make_instance("th4", pt);
  for (auto _ : state) benchmark::DoNotOptimize(run_instance(inst, family_options()));
}
BENCHMARK(BM_ReproduceTh4)->Arg(12)->Arg(24)->Arg(96)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
