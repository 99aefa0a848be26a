// Microbenchmarks for the numerical kernels and one full suite cell.
#include <benchmark/benchmark.h>

#include "mazurlab/checks.hpp"
#include "mazurlab/funccalc.hpp"
#include "mazurlab/mazur.hpp"
#include "mazurlab/random_elements.hpp"
#include "mazurlab/schatten.hpp"

namespace {

using namespace mazurlab;

Element fixed_gaussian(int dim) {
  Rng rng(12345);
  return random_gaussian(AlgebraShape::simple(dim), rng);
}

Element fixed_positive(int dim) {
  Rng rng(54321);
  return random_positive(AlgebraShape::simple(dim), rng, 0.1, 10.0);
}

void BM_HermitianEig(benchmark::State& state) {
  const Element x = symmetrize(fixed_gaussian(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(x));
}
BENCHMARK(BM_HermitianEig)->Arg(4)->Arg(8)->Arg(16);

void BM_Svd(benchmark::State& state) {
  const Element x = fixed_gaussian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(svd(x));
}
BENCHMARK(BM_Svd)->Arg(4)->Arg(8)->Arg(16);

void BM_SchattenNorm(benchmark::State& state) {
  const Element x = fixed_gaussian(static_cast<int>(state.range(0)));
  const PNorm p(1.7);
  for (auto _ : state) benchmark::DoNotOptimize(schatten_norm(x, p));
}
BENCHMARK(BM_SchattenNorm)->Arg(4)->Arg(8)->Arg(16);

void BM_MazurMap(benchmark::State& state) {
  const Element x = fixed_gaussian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mazur_map(x, 1.0, 2.0));
}
BENCHMARK(BM_MazurMap)->Arg(4)->Arg(8)->Arg(16);

void BM_PowerViaIntegral(benchmark::State& state) {
  const Element x = fixed_positive(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(power_via_integral(x, 0.5));
}
BENCHMARK(BM_PowerViaIntegral)->Arg(4)->Arg(8);

void BM_SuiteTrial(benchmark::State& state) {
  CellParams cell;
  cell.lemma = Lemma::power_contraction;
  cell.dim = static_cast<int>(state.range(0));
  cell.theta = 0.5;
  cell.p = 2.0;
  uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_trial(cell, seed++));
}
BENCHMARK(BM_SuiteTrial)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
