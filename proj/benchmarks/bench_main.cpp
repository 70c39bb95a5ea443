#include <benchmark/benchmark.h>

#include <random>

#include "turan/canon.hpp"
#include "turan/combinations.hpp"
#include "turan/constructions.hpp"
#include "turan/graph.hpp"
#include "turan/pattern.hpp"
#include "turan/search.hpp"

namespace {

using namespace turan;

std::vector<Graph> random_graphs(int n, double p, int count) {
  std::mt19937_64 rng(42);
  std::bernoulli_distribution coin(p);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) es.push_back(Edge{u, v});
    out.push_back(Graph::from_edges(n, es));
  }
  return out;
}

void BM_CountTriangles(benchmark::State& state) {
  const auto graphs = random_graphs(static_cast<int>(state.range(0)), 0.5, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(count_triangles(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CountTriangles)->Arg(8)->Arg(16)->Arg(64);

void BM_SuspensionDetector(benchmark::State& state) {
  const auto graphs = random_graphs(static_cast<int>(state.range(0)), 0.3, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(detail::has_suspension_p4(graphs[i++ % graphs.size()].rows()));
}
BENCHMARK(BM_SuspensionDetector)->Arg(8)->Arg(16)->Arg(64);

void BM_SuspensionFreeLarge(benchmark::State& state) {
  const Graph g = bipartite_matching(64);
  for (auto _ : state) benchmark::DoNotOptimize(is_p4hat_free(g));
}
BENCHMARK(BM_SuspensionFreeLarge);

void BM_CanonicalForm(benchmark::State& state) {
  const auto graphs = random_graphs(static_cast<int>(state.range(0)), 0.5, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12);

void BM_NextColex(benchmark::State& state) {
  std::vector<int> combo{0, 1, 2, 3, 4, 5, 6};
  for (auto _ : state) {
    if (next_colex(combo, 38) < 0) combo = {0, 1, 2, 3, 4, 5, 6};
    benchmark::DoNotOptimize(combo.data());
  }
}
BENCHMARK(BM_NextColex);

void BM_SearchSevenNine(benchmark::State& state) {
  SearchOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_search(7, 9, opts));
}
BENCHMARK(BM_SearchSevenNine)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SearchEightNine(benchmark::State& state) {
  SearchOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_search(8, 9, opts));
}
BENCHMARK(BM_SearchEightNine)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
BENCHMARK_MAIN();
