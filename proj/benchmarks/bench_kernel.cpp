#include <benchmark/benchmark.h>

#include "freeprob/brownian.hpp"
#include "freeprob/jacobi.hpp"
#include "freeprob/ncpart.hpp"
#include "freeprob/schur.hpp"

using namespace freeprob;

namespace {

void BM_ScalarMulReduce(benchmark::State& state) {
  const Scalar a = (Scalar(1L) + Scalar::t() * Scalar::q_pow(2)) /
                   (Scalar(1L) - Scalar::q_pow(2));
  const Scalar b = (Scalar::t() - Scalar::q_pow(4)) /
                   (Scalar(1L) + Scalar::q_pow(2));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMulReduce);

void BM_GTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g_table(n));
}
BENCHMARK(BM_GTable)->Arg(4)->Arg(8);

void BM_MSeriesRevert(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(b_table_oracle(n));
}
BENCHMARK(BM_MSeriesRevert)->Arg(4)->Arg(8);

void BM_MixedCumulant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MomentOracle oracle = fubm_oracle(Rat(1));
  std::vector<int> word(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = i % 2 ? -1 : 1;
  enumerate_nc(n);  // warm the partition cache
  for (auto _ : state) benchmark::DoNotOptimize(mixed_cumulant(oracle, word));
}
BENCHMARK(BM_MixedCumulant)->Arg(6)->Arg(8);

void BM_SchurStep(benchmark::State& state) {
  const Series f0 = f0_closed(6);
  for (auto _ : state) benchmark::DoNotOptimize(schur_algorithm(f0, 2));
}
BENCHMARK(BM_SchurStep);

}  // namespace

BENCHMARK_MAIN();
