#include <random>
#include <sstream>
#include <vector>

#include <benchmark/benchmark.h>

#include "siglap/cut.hpp"
#include "siglap/functional.hpp"
#include "siglap/graph.hpp"
#include "siglap/ipm.hpp"

namespace {

siglap::Graph ring(int n) {
  std::vector<siglap::Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({i, (i + 1) % n, 1.0});
  return siglap::Graph::from_edges(n, edges);
}

// Connected by construction: a ring plus random chords.
siglap::Graph noisy_ring(int n, int chords, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<siglap::Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  std::vector<std::vector<char>> seen(static_cast<size_t>(n),
                                      std::vector<char>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    seen[static_cast<size_t>(i)][static_cast<size_t>((i + 1) % n)] = 1;
    seen[static_cast<size_t>((i + 1) % n)][static_cast<size_t>(i)] = 1;
  }
  int added = 0;
  while (added < chords) {
    int u = pick(rng), v = pick(rng);
    if (u == v || seen[static_cast<size_t>(u)][static_cast<size_t>(v)]) continue;
    seen[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
    seen[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    edges.push_back({u, v, 1.0});
    ++added;
  }
  return siglap::Graph::from_edges(n, edges);
}

std::vector<double> random_vector(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(static_cast<size_t>(n));
  for (auto& v : x) v = u(rng);
  return x;
}

void BM_Iplus(benchmark::State& state) {
  auto g = noisy_ring(static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(0)), 1);
  auto x = random_vector(g.vertex_count(), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(siglap::iplus(g, x));
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_Iplus)->Arg(64)->Arg(256)->Arg(1024);

void BM_ParseGset(benchmark::State& state) {
  auto g = noisy_ring(static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(0)), 3);
  std::string text = siglap::to_gset(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(siglap::parse_gset_text(text));
  state.SetBytesProcessed(state.iterations() *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseGset)->Arg(256)->Arg(1024);

void BM_InnerSolve(benchmark::State& state) {
  auto g = noisy_ring(static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(0)) / 2, 4);
  auto warm = siglap::normalized(g, random_vector(g.vertex_count(), 5));
  auto v = siglap::norm_subgradient(g, warm);
  double lambda = siglap::iplus(g, warm);
  siglap::IpmConfig cfg;
  for (auto _ : state)
    benchmark::DoNotOptimize(siglap::inner_solve(g, lambda, v, warm, cfg));
}
BENCHMARK(BM_InnerSolve)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_TwoThresholdRound(benchmark::State& state) {
  auto g = noisy_ring(static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(0)), 6);
  auto x = random_vector(g.vertex_count(), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(siglap::two_threshold_round(
        g, x, siglap::CutObjective::ratio_with_frontier));
}
BENCHMARK(BM_TwoThresholdRound)->Arg(64)->Arg(256)->Arg(1024);

void BM_IpmMultistart(benchmark::State& state) {
  auto g = noisy_ring(static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(0)) / 2, 8);
  siglap::IpmConfig cfg;
  cfg.rng_seed = 9;
  for (auto _ : state)
    benchmark::DoNotOptimize(siglap::ipm_multistart(g, 4, cfg, 1));
}
BENCHMARK(BM_IpmMultistart)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
