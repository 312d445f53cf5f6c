// Microbenchmarks for the analysis pipeline. A ring with every third
// diameter chord keeps the workload deterministic while staying irregular
// enough that no channel degenerates.

#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "netgame/game.hpp"
#include "netgame/graph.hpp"
#include "netgame/lti.hpp"
#include "netgame/oog.hpp"
#include "netgame/polynomial.hpp"
#include "netgame/sim.hpp"

namespace {

netgame::Graph ring_with_chords(int n) {
  std::vector<std::pair<netgame::Vertex, netgame::Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (int i = 0; i + n / 2 < n; i += 3) edges.push_back({i, i + n / 2});
  return netgame::Graph(n, std::move(edges));
}

netgame::PayoffMatrix random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> entry(0.0, 5.0);
  netgame::PayoffMatrix m;
  for (int i = 0; i < rows; ++i) m.attack_actions.push_back(i + 1);
  for (int j = 0; j < cols; ++j) m.monitor_actions.push_back(j + 1);
  m.entries.resize(rows);
  for (auto& row : m.entries) {
    for (int j = 0; j < cols; ++j) row.push_back(entry(rng));
  }
  return m;
}

void BM_AdjugateTable(benchmark::State& state) {
  const auto g = ring_with_chords(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    netgame::AdjugateTable table(g);
    benchmark::DoNotOptimize(table.char_poly().degree());
  }
}
BENCHMARK(BM_AdjugateTable)->DenseRange(6, 14, 4)->Unit(benchmark::kMicrosecond);

void BM_ChannelGain(benchmark::State& state) {
  const auto g = ring_with_chords(10);
  const netgame::AdjugateTable table(g);
  const auto sc = netgame::AttackScenario::build(g, table, {0, 4, 3});
  for (auto _ : state) {
    auto r = netgame::output_to_output_gain(sc);
    benchmark::DoNotOptimize(r.bounded());
  }
}
BENCHMARK(BM_ChannelGain)->Unit(benchmark::kMicrosecond);

void BM_NumeratorRoots(benchmark::State& state) {
  const auto g = ring_with_chords(14);
  const netgame::AdjugateTable table(g);
  const auto p = table.numerator(1, 0);
  for (auto _ : state) {
    auto roots = netgame::find_roots(p);
    benchmark::DoNotOptimize(roots.size());
  }
}
BENCHMARK(BM_NumeratorRoots)->Unit(benchmark::kMicrosecond);

void BM_PayoffMatrix(benchmark::State& state) {
  const auto g = ring_with_chords(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto m = netgame::build_payoff_matrix(g, 0);
    benchmark::DoNotOptimize(m.rows());
  }
  const int pairs = (g.size() - 1) * (g.size() - 1);
  state.SetItemsProcessed(state.iterations() * pairs);
}
BENCHMARK(BM_PayoffMatrix)->DenseRange(6, 10, 4)->Unit(benchmark::kMillisecond);

void BM_SolveZeroSum(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto m = random_matrix(dim, dim, 7u + static_cast<unsigned>(dim));
  for (auto _ : state) {
    auto eq = netgame::solve_zero_sum(m);
    benchmark::DoNotOptimize(eq.value);
  }
}
BENCHMARK(BM_SolveZeroSum)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMicrosecond);

void BM_GridOracle(benchmark::State& state) {
  const auto g = ring_with_chords(10);
  const netgame::AdjugateTable table(g);
  const auto sc = netgame::AttackScenario::build(g, table, {0, 4, 3});
  for (auto _ : state) {
    double v = netgame::grid_gain_oracle(sc, 1e3, 10000);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_GridOracle)->Unit(benchmark::kMillisecond);

void BM_SteadyStatePoint(benchmark::State& state) {
  const auto g = ring_with_chords(8);
  const double dt = netgame::suggested_time_step(g);
  for (auto _ : state) {
    auto p = netgame::steady_state_point(g, {0, 4, 3}, 1.0, 50.0, dt);
    benchmark::DoNotOptimize(p.ratio);
  }
}
BENCHMARK(BM_SteadyStatePoint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
