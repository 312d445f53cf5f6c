#pragma once

// Undirected connected weighted graphs and the monitor-placement
// feasibility tests.

#include <utility>
#include <vector>

#include "netgame/linalg.hpp"
#include "netgame/types.hpp"

namespace netgame {

class Graph {
 public:
  // Vertices are 0..n-1. Edges must be distinct unordered pairs of distinct
  // vertices; weights, when given, must be positive and match the edge
  // count (unit weights otherwise). The graph must be connected; violations
  // raise ValidationError naming the offending edge or vertex.
  Graph(int n_vertices, std::vector<std::pair<Vertex, Vertex>> edges,
        std::vector<double> weights = {});

  int size() const { return n_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  const std::vector<double>& weights() const { return weights_; }
  bool unit_weights() const { return unit_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  MatD adjacency() const;
  MatD degree_matrix() const;
  MatI adjacency_int() const;  // unit weights only
  MatI laplacian_int() const;  // unit weights only

  // Hop distance (weights ignored).
  int distance(Vertex u, Vertex v) const;
  std::vector<int> distances_from(Vertex source) const;

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<double> weights_;
  bool unit_ = true;
  std::vector<std::vector<Vertex>> adj_;
};

// Weighted Laplacian D - W.
MatD laplacian(const Graph& g);

// Monitor vertices m != target such that no vertex is strictly closer to the
// target than to m; exactly the monitors whose worst-case stealthy-attack
// impact stays bounded for every attack location.
std::vector<Vertex> feasible_monitor_set(const Graph& g, Vertex target);

// Adjacency-algebra test: entry (target, monitor) of A(I + A) equals entry
// (target, target) of A^2. A sufficient condition for membership in the
// feasible monitor set. Exact integer arithmetic for unit weights; weighted
// graphs compare with relative tolerance 1e-9.
bool algebraic_monitor_condition(const Graph& g, Vertex target, Vertex monitor);

}  // namespace netgame
