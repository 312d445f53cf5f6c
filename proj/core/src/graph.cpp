#include "netgame/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <string>

namespace netgame {

namespace {

std::string vtx(Vertex v) { return std::to_string(v + 1); }  // 1-based in messages

}  // namespace

Graph::Graph(int n_vertices, std::vector<std::pair<Vertex, Vertex>> edges,
             std::vector<double> weights)
    : n_(n_vertices), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (n_ <= 0) throw ValidationError("graph needs at least one vertex");
  if (!weights_.empty() && weights_.size() != edges_.size()) {
    throw ValidationError("expected " + std::to_string(edges_.size()) +
                          " edge weights, got " + std::to_string(weights_.size()));
  }
  unit_ = weights_.empty();
  if (!unit_) {
    for (size_t k = 0; k < weights_.size(); ++k) {
      if (!(weights_[k] > 0) || !std::isfinite(weights_[k])) {
        throw ValidationError("edge " + std::to_string(k + 1) +
                              " has non-positive weight");
      }
    }
    if (std::all_of(weights_.begin(), weights_.end(),
                    [](double w) { return w == 1.0; })) {
      unit_ = true;
      weights_.clear();
    }
  }

  adj_.assign(n_, {});
  std::set<std::pair<Vertex, Vertex>> seen;
  for (size_t k = 0; k < edges_.size(); ++k) {
    auto [a, b] = edges_[k];
    if (a < 0 || a >= n_ || b < 0 || b >= n_) {
      throw ValidationError("edge " + std::to_string(k + 1) +
                            " references a vertex outside 1.." + std::to_string(n_));
    }
    if (a == b) {
      throw ValidationError("edge " + std::to_string(k + 1) + " is a self-loop at " +
                            vtx(a));
    }
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw ValidationError("duplicate edge {" + vtx(key.first) + "," +
                            vtx(key.second) + "}");
    }
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  const auto dist = distances_from(0);
  for (Vertex v = 0; v < n_; ++v) {
    if (dist[v] < 0) {
      throw ValidationError("graph is disconnected: vertex " + vtx(v) +
                            " is unreachable from vertex 1");
    }
  }
}

MatD Graph::adjacency() const {
  MatD a(n_, n_);
  for (size_t k = 0; k < edges_.size(); ++k) {
    const double w = unit_ ? 1.0 : weights_[k];
    a(edges_[k].first, edges_[k].second) = w;
    a(edges_[k].second, edges_[k].first) = w;
  }
  return a;
}

MatD Graph::degree_matrix() const {
  MatD d(n_, n_);
  for (size_t k = 0; k < edges_.size(); ++k) {
    const double w = unit_ ? 1.0 : weights_[k];
    d(edges_[k].first, edges_[k].first) += w;
    d(edges_[k].second, edges_[k].second) += w;
  }
  return d;
}

MatI Graph::adjacency_int() const {
  if (!unit_) throw ValidationError("integer adjacency requires unit weights");
  MatI a(n_, n_);
  for (const auto& [u, v] : edges_) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

MatI Graph::laplacian_int() const {
  if (!unit_) throw ValidationError("integer Laplacian requires unit weights");
  MatI l(n_, n_);
  for (const auto& [u, v] : edges_) {
    l(u, v) -= 1;
    l(v, u) -= 1;
    l(u, u) += 1;
    l(v, v) += 1;
  }
  return l;
}

std::vector<int> Graph::distances_from(Vertex source) const {
  std::vector<int> dist(n_, -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adj_[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int Graph::distance(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw ValidationError("distance: vertex outside 1.." + std::to_string(n_));
  }
  return distances_from(u)[v];
}

MatD laplacian(const Graph& g) {
  MatD l = g.degree_matrix();
  const MatD a = g.adjacency();
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) l(i, j) -= a(i, j);
  return l;
}

std::vector<Vertex> feasible_monitor_set(const Graph& g, Vertex target) {
  const int n = g.size();
  if (target < 0 || target >= n) {
    throw ValidationError("target vertex outside 1.." + std::to_string(n));
  }
  const auto to_target = g.distances_from(target);
  std::vector<Vertex> out;
  for (Vertex m = 0; m < n; ++m) {
    if (m == target) continue;
    const auto to_m = g.distances_from(m);
    bool ok = true;
    for (Vertex a = 0; a < n && ok; ++a) {
      if (a == target) continue;
      ok = to_m[a] <= to_target[a];
    }
    if (ok) out.push_back(m);
  }
  return out;
}

bool algebraic_monitor_condition(const Graph& g, Vertex target, Vertex monitor) {
  const int n = g.size();
  if (target < 0 || target >= n || monitor < 0 || monitor >= n) {
    throw ValidationError("vertex outside 1.." + std::to_string(n));
  }
  if (monitor == target) return false;
  if (g.unit_weights()) {
    const MatI a = g.adjacency_int();
    const MatI a2 = matmul(a, a);
    return a(target, monitor) + a2(target, monitor) == a2(target, target);
  }
  const MatD a = g.adjacency();
  const MatD a2 = matmul(a, a);
  const double lhs = a(target, monitor) + a2(target, monitor);
  const double rhs = a2(target, target);
  return std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::max(std::abs(lhs), std::abs(rhs)));
}

}  // namespace netgame
