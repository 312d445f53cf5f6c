#include <algorithm>
#include <random>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "netgame/graph.hpp"
#include "netgame/types.hpp"

using namespace netgame;
using test_support::floyd_warshall_distances;
using test_support::random_connected_graph;

namespace {

const Graph& p3() {
  static const Graph g(3, {{0, 1}, {1, 2}});
  return g;
}

// Star: center 0, leaves 1..3.
const Graph& s4() {
  static const Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
  return g;
}

// Brute-force restatement of the feasibility definition.
std::vector<Vertex> feasible_by_definition(const Graph& g, Vertex target) {
  std::vector<Vertex> out;
  for (Vertex m = 0; m < g.size(); ++m) {
    if (m == target) continue;
    bool ok = true;
    for (Vertex a = 0; a < g.size() && ok; ++a) {
      if (a == target) continue;
      ok = g.distance(a, m) <= g.distance(a, target);
    }
    if (ok) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), ValidationError);                  // self loop
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), ValidationError);          // duplicate
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), ValidationError);                  // out of range
  CHECK_THROWS_AS(Graph(4, {{0, 1}, {2, 3}}), ValidationError);          // disconnected
  CHECK_THROWS_AS(Graph(0, {}), ValidationError);                        // empty
  CHECK_THROWS_AS(Graph(2, {{0, 1}}, {1.0, 2.0}), ValidationError);      // weight count
  CHECK_THROWS_AS(Graph(2, {{0, 1}}, {-1.0}), ValidationError);          // weight sign
  CHECK_THROWS_AS(Graph(2, {{0, 1}}, {0.0}), ValidationError);           // zero weight
  CHECK_NOTHROW(Graph(1, {}));
}

TEST_CASE("explicit unit weights count as unit") {
  const Graph g(2, {{0, 1}}, {1.0});
  CHECK(g.unit_weights());
  const Graph w(2, {{0, 1}}, {2.0});
  CHECK_FALSE(w.unit_weights());
}

TEST_CASE("matrices of the 3-path") {
  const MatD lap = laplacian(p3());
  const double expect[3][3] = {{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(lap(i, j) == doctest::Approx(expect[i][j]));

  const MatI lap_i = p3().laplacian_int();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(static_cast<double>(lap_i(i, j)) == expect[i][j]);

  const MatD adj = p3().adjacency();
  CHECK(adj(0, 1) == 1.0);
  CHECK(adj(1, 0) == 1.0);
  CHECK(adj(0, 2) == 0.0);
  CHECK(adj(0, 0) == 0.0);

  const MatD deg = p3().degree_matrix();
  CHECK(deg(1, 1) == 2.0);
  CHECK(deg(0, 1) == 0.0);
}

TEST_CASE("weighted Laplacian") {
  const Graph g(2, {{0, 1}}, {2.5});
  const MatD lap = laplacian(g);
  CHECK(lap(0, 0) == doctest::Approx(2.5));
  CHECK(lap(0, 1) == doctest::Approx(-2.5));
  CHECK_THROWS_AS(g.adjacency_int(), ValidationError);
  CHECK_THROWS_AS(g.laplacian_int(), ValidationError);
}

TEST_CASE("hop distances ignore weights") {
  const Graph g(3, {{0, 1}, {1, 2}}, {10.0, 0.5});
  CHECK(g.distance(0, 2) == 2);
  CHECK(g.distance(0, 0) == 0);
  CHECK(g.distance(2, 0) == 2);
  const auto d = g.distances_from(1);
  CHECK(d == std::vector<int>{1, 0, 1});
}

TEST_CASE("BFS distances match Floyd-Warshall on random graphs") {
  std::mt19937 rng(7u);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_connected_graph(rng, 2, 12);
    const auto fw = floyd_warshall_distances(g);
    for (Vertex u = 0; u < g.size(); ++u) {
      const auto du = g.distances_from(u);
      for (Vertex v = 0; v < g.size(); ++v) {
        CHECK(du[v] == fw[u][v]);
        CHECK(g.distance(u, v) == fw[u][v]);
      }
    }
  }
}

TEST_CASE("feasible monitors on the 3-path") {
  // Ends: both other vertices qualify. Middle: no vertex does, because the
  // far end is strictly closer to itself than to the middle.
  CHECK(feasible_monitor_set(p3(), 2) == std::vector<Vertex>{0, 1});
  CHECK(feasible_monitor_set(p3(), 0) == std::vector<Vertex>{1, 2});
  CHECK(feasible_monitor_set(p3(), 1).empty());
}

TEST_CASE("feasible monitors on the star") {
  // Target a leaf: the center and the other leaves all qualify (ties are
  // allowed; the criterion is non-strict).
  CHECK(feasible_monitor_set(s4(), 1) == std::vector<Vertex>{0, 2, 3});
  // Target the center: every leaf is strictly farther from the other
  // leaves than the center is, so nothing qualifies.
  CHECK(feasible_monitor_set(s4(), 0).empty());
}

TEST_CASE("feasible set matches the definition on random graphs") {
  std::mt19937 rng(11u);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_connected_graph(rng, 2, 10);
    for (Vertex t = 0; t < g.size(); ++t) {
      CHECK(feasible_monitor_set(g, t) == feasible_by_definition(g, t));
    }
  }
}

TEST_CASE("feasible_monitor_set validates the target") {
  CHECK_THROWS_AS(feasible_monitor_set(p3(), 3), ValidationError);
  CHECK_THROWS_AS(feasible_monitor_set(p3(), -1), ValidationError);
}

TEST_CASE("adjacency-algebra test on frozen cases") {
  // 3-path, target an end: both other vertices pass.
  CHECK(algebraic_monitor_condition(p3(), 2, 0));
  CHECK(algebraic_monitor_condition(p3(), 2, 1));
  // Star, target a leaf: center and the other leaves pass.
  CHECK(algebraic_monitor_condition(s4(), 1, 0));
  CHECK(algebraic_monitor_condition(s4(), 1, 2));
  CHECK(algebraic_monitor_condition(s4(), 1, 3));
  // 4-path, far end against the opposite end: entry (3,0) of A + A^2 is 0
  // while (3,3) of A^2 is 1.
  const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(algebraic_monitor_condition(p4, 3, 0));
}

TEST_CASE("adjacency-algebra test on weighted graphs") {
  // Single edge of weight w: the condition reads w == w^2, true only at 1.
  CHECK(algebraic_monitor_condition(Graph(2, {{0, 1}}, {1.0}), 0, 1));
  CHECK_FALSE(algebraic_monitor_condition(Graph(2, {{0, 1}}, {2.0}), 0, 1));
}

TEST_CASE("adjacency-algebra test implies feasibility") {
  std::mt19937 rng(13u);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_connected_graph(rng, 2, 10);
    for (Vertex t = 0; t < g.size(); ++t) {
      const auto feasible = feasible_monitor_set(g, t);
      for (Vertex m = 0; m < g.size(); ++m) {
        if (m == t) continue;
        if (algebraic_monitor_condition(g, t, m)) {
          CHECK(std::find(feasible.begin(), feasible.end(), m) != feasible.end());
        }
      }
    }
  }
}
