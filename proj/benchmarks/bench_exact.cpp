#include <benchmark/benchmark.h>

#include "palab/exact.hpp"
#include "palab/generators.hpp"

using namespace palab;

static void BM_ExactPa(benchmark::State& state) {
  const Instance inst = gen_uniform(Seed{3}, 0, state.range(0), 2, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(exact_pa(inst));
}
BENCHMARK(BM_ExactPa)->DenseRange(6, 12, 2);

static void BM_ExactPaBoundary(benchmark::State& state) {
  const Instance inst = gen_uniform(Seed{3}, 0, state.range(0), 2, 2.0);
  const HyperRect cube = HyperRect::unit_cube(2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_pa_boundary(inst, cube));
}
BENCHMARK(BM_ExactPaBoundary)->DenseRange(6, 10, 2);

static void BM_OracleEnumerate(benchmark::State& state) {
  const Instance inst = gen_uniform(Seed{3}, 0, state.range(0), 2, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_enumerate(inst));
}
BENCHMARK(BM_OracleEnumerate)->DenseRange(4, 7, 1);
