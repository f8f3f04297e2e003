#include <benchmark/benchmark.h>

#include <cmath>

#include "lowzero/archimedean.hpp"
#include "lowzero/bounds.hpp"
#include "lowzero/characters.hpp"
#include "lowzero/primes.hpp"
#include "lowzero/testfuncs.hpp"
#include "lowzero/zerofinder.hpp"

using namespace lowzero;

static void BM_SieveToMillion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_table(1'000'000));
}
BENCHMARK(BM_SieveToMillion);

static void BM_WeightedSum(benchmark::State& state) {
  const PrimeTable table = build_table(1'000'000);
  const TestFunction f = TestFunction::falpha(2.6);
  for (auto _ : state)
    benchmark::DoNotOptimize(weighted_sum(f, 13.0, WeightTwist::none(), table));
}
BENCHMARK(BM_WeightedSum);

static void BM_FAlphaTransform(benchmark::State& state) {
  const TestFunction f = TestFunction::falpha(2.6);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier(f, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_FAlphaTransform);

static void BM_MinorantTransform(benchmark::State& state) {
  const TestFunction f = TestFunction::jbeta(1.7);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier(f, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_MinorantTransform);

static void BM_ArchIntegral(benchmark::State& state) {
  const TestFunction f = TestFunction::falpha(2.6);
  for (auto _ : state) benchmark::DoNotOptimize(i_arch(f, 4.7, 0.0, 1e-9));
}
BENCHMARK(BM_ArchIntegral);

static void BM_CharacterTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_characters(240));
}
BENCHMARK(BM_CharacterTable);

static void BM_HurwitzRow(benchmark::State& state) {
  const ModulusBank bank(101);
  std::vector<std::complex<double>> row;
  double t = 10.0;
  for (auto _ : state) {
    bank.hurwitz_row(t, row);
    benchmark::DoNotOptimize(row);
    t += 1e-2;
  }
}
BENCHMARK(BM_HurwitzRow);

static void BM_FindZeros(benchmark::State& state) {
  const CharacterTable tab = build_characters(4);
  const std::size_t idx = tab.primitive_indices().front();
  for (auto _ : state) benchmark::DoNotOptimize(find_zeros(tab, idx, 30.0));
}
BENCHMARK(BM_FindZeros);

static void BM_QuadraticProportion(benchmark::State& state) {
  double b = 0.66;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadratic_proportion(b));
    b = b < 5.0 ? b + 1e-3 : 0.66;
  }
}
BENCHMARK(BM_QuadraticProportion);

BENCHMARK_MAIN();
