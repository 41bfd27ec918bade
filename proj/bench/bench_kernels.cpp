#include <benchmark/benchmark.h>

#include <map>

#include "orient4/corpus.hpp"
#include "orient4/kernels.hpp"
#include "orient4/oracle.hpp"
#include "orient4/pipeline.hpp"

using namespace orient4;

namespace {

// Pipeline orientation (as arc lists) of the largest of 20 generated graphs
// with at most n vertices.
const kernels::Adjacency& sample_arcs(int n) {
  static std::map<int, kernels::Adjacency> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    const auto entries = generate_corpus(1, 5, 20, n);
    const MultiGraph* big = &entries.front().graph;
    for (const auto& e : entries)
      if (e.graph.vertex_count() > big->vertex_count()) big = &e.graph;
    const PipelineResult r = orient_diameter4(*big);
    it = cache.emplace(n, arc_lists(r.orientation).out).first;
  }
  return it->second;
}

void BM_DiameterSerial(benchmark::State& state) {
  const auto& arcs = sample_arcs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::directed_diameter_serial(arcs));
  state.counters["n"] = static_cast<double>(arcs.size());
}

void BM_DiameterParallel(benchmark::State& state) {
  const auto& arcs = sample_arcs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::directed_diameter_parallel(arcs));
  state.counters["n"] = static_cast<double>(arcs.size());
  state.counters["threads"] = kernels::max_threads();
}

const MultiGraph& oracle_graph() {
  static const MultiGraph g = grid_graph(3, 4);  // 17 edges
  return g;
}

void BM_OracleSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(min_oriented_diameter_serial(oracle_graph()).min_diameter);
}

void BM_OracleParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(min_oriented_diameter(oracle_graph()).min_diameter);
  state.counters["threads"] = kernels::max_threads();
}

void BM_Pipeline(benchmark::State& state) {
  const MultiGraph g = generate_corpus(3, static_cast<int>(state.range(0)), 1, 150).front().graph;
  for (auto _ : state) benchmark::DoNotOptimize(orient_diameter4(g).report.directed_diameter);
  state.counters["n"] = g.vertex_count();
}

}  // namespace

BENCHMARK(BM_DiameterSerial)->Arg(60)->Arg(150);
BENCHMARK(BM_DiameterParallel)->Arg(60)->Arg(150);
BENCHMARK(BM_OracleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pipeline)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
