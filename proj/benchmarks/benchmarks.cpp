#include <benchmark/benchmark.h>

#include "uniconn/canonical.hpp"
#include "uniconn/connectivity.hpp"
#include "uniconn/constructions.hpp"
#include "uniconn/extremal.hpp"
#include "uniconn/graph.hpp"
#include "uniconn/planarity.hpp"
#include "uniconn/treewidth.hpp"

namespace {

using namespace uniconn;

Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back(Edge(i, (i + 1) % 5));
    es.push_back(Edge(5 + i, 5 + (i + 2) % 5));
    es.push_back(Edge(i, 5 + i));
  }
  return make_graph(10, es);
}

void bm_local_connectivity(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_connectivity(g, 0, 7));
  }
}
BENCHMARK(bm_local_connectivity);

void bm_uniformity_check(benchmark::State& state) {
  const Graph g = generate_extremal(static_cast<int>(state.range(0)), 3).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_uniformly_k_connected(g, 3));
  }
}
BENCHMARK(bm_uniformity_check)->Arg(8)->Arg(11)->Arg(14);

void bm_canonical_form(benchmark::State& state) {
  const Graph g = generate_extremal(static_cast<int>(state.range(0)), 5).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_graph6(g));
  }
}
BENCHMARK(bm_canonical_form)->Arg(10)->Arg(12);

void bm_treewidth_exact(benchmark::State& state) {
  const Graph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(treewidth_exact(g).value);
  }
}
BENCHMARK(bm_treewidth_exact)->Arg(10)->Arg(14)->Arg(18);

void bm_crossing_le_one(benchmark::State& state) {
  const Graph g = complete_bipartite(3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(crossing_le_one(g).kind);
  }
}
BENCHMARK(bm_crossing_le_one);

void bm_replay_random_recipe(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(replay(random_recipe(seed++, 14), false).graph);
  }
}
BENCHMARK(bm_replay_random_recipe);

void bm_enumerate_extremal(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_extremal(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(bm_enumerate_extremal)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
