#pragma once

// Shared test support: the random graph sample generator, an independent
// all-pairs distance oracle, and fixture paths.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netgame/graph.hpp"

namespace test_support {

// Random connected unit-weight graph: a random recursive tree plus up to n
// extra edges. Deterministic given the generator state.
inline netgame::Graph random_connected_graph(std::mt19937& rng, int n_min, int n_max) {
  std::uniform_int_distribution<int> nd(n_min, n_max);
  const int n = nd(rng);
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> have;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pd(0, v - 1);
    const int u = pd(rng);
    edges.push_back({u, v});
    have.insert({std::min(u, v), std::max(u, v)});
  }
  std::uniform_int_distribution<int> extra_d(0, n);
  std::uniform_int_distribution<int> vd(0, n - 1);
  for (int k = extra_d(rng); k > 0; --k) {
    const int u = vd(rng), v = vd(rng);
    if (u == v) continue;
    const auto e = std::make_pair(std::min(u, v), std::max(u, v));
    if (have.count(e)) continue;
    have.insert(e);
    edges.push_back(e);
  }
  return netgame::Graph(n, edges);
}

// All-pairs hop distances by Floyd-Warshall, independent of the BFS used by
// Graph::distance.
inline std::vector<std::vector<int>> floyd_warshall_distances(const netgame::Graph& g) {
  const int n = g.size();
  const int big = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, big));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::string data_path(const std::string& file) {
  return std::string(NETGAME_TEST_DATA_DIR) + "/" + file;
}

}  // namespace test_support
