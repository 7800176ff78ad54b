#include <benchmark/benchmark.h>

#include "k2l/connectivity.hpp"
#include "k2l/families.hpp"
#include "k2l/minor_oracle.hpp"
#include "k2l/nested_cuts.hpp"
#include "k2l/steiner.hpp"

using namespace k2l;

static void BM_StConnectivity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = cycle_strong_edge(n);
  VertexSet s({0, n}), t({n / 2, n + n / 2});
  for (auto _ : state) benchmark::DoNotOptimize(st_connectivity(g, s, t));
}
BENCHMARK(BM_StConnectivity)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

static void BM_VertexConnectivity(benchmark::State& state) {
  Graph g = necklace(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->Arg(8)->Arg(16)->Arg(32);

static void BM_OracleFreenessProof(benchmark::State& state) {
  Graph g = necklace(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    OracleResult r = find_k2l_minor(g, 5);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_OracleFreenessProof)->Arg(5)->Arg(6)->Arg(7);

static void BM_OracleModelFound(benchmark::State& state) {
  Graph g = necklace(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    OracleResult r = find_k2l_minor(g, 4);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_OracleModelFound)->Arg(5)->Arg(6)->Arg(7);

static void BM_MaxLeafSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = apex_necklace(n);
  const int ell = (n - 1) / 7;
  for (auto _ : state) {
    MaxLeafResult r = max_leaf_search(g, 2 * n, ell);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MaxLeafSearch)->Arg(16)->Arg(29)->Arg(43);

static void BM_NestedTwinsPipeline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = cycle_strong_edge(n);
  VertexSet s({0, n}), t({n / 2, n + n / 2});
  for (auto _ : state) {
    auto lcuts = layer_cuts(g, 0, n / 2);
    CutSequence seq = find_2nested(g, s, t, lcuts, 4);
    Witness w = extract_from_nested(g, seq, 2);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_NestedTwinsPipeline)->Arg(24)->Arg(40)->Arg(64);

BENCHMARK_MAIN();
