#include <benchmark/benchmark.h>

#include "palab/generators.hpp"
#include "palab/mst.hpp"
#include "palab/power.hpp"

using namespace palab;

static void BM_MstDensePrim(benchmark::State& state) {
  const Instance inst = gen_uniform(Seed{1}, 0, state.range(0), 2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(detail::mst_dense_prim(inst));
}
BENCHMARK(BM_MstDensePrim)->Arg(512)->Arg(2048)->Arg(4096);

static void BM_MstBoruvkaKd(benchmark::State& state) {
  const Instance inst = gen_uniform(Seed{1}, 0, state.range(0), 2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(detail::mst_boruvka_kdtree(inst));
}
BENCHMARK(BM_MstBoruvkaKd)->Arg(2048)->Arg(16384)->Arg(100000);

static void BM_MstSortedPath(benchmark::State& state) {
  const Instance inst = gen_uniform(Seed{1}, 0, state.range(0), 1, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(detail::mst_sorted_path(inst));
}
BENCHMARK(BM_MstSortedPath)->Arg(10000)->Arg(100000);

static void BM_PtHeuristic(benchmark::State& state) {
  const Instance inst = gen_uniform(Seed{2}, 0, state.range(0), 2, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(pt_heuristic(inst));
}
BENCHMARK(BM_PtHeuristic)->Arg(1000)->Arg(10000);
