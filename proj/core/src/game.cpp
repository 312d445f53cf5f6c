#include "netgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netgame/oog.hpp"

namespace netgame {

std::vector<int> PayoffMatrix::feasible_columns() const {
  std::vector<int> out;
  for (int j = 0; j < cols(); ++j) {
    bool ok = true;
    for (int i = 0; i < rows() && ok; ++i) ok = entries[i][j].is_finite();
    if (ok) out.push_back(j);
  }
  return out;
}

PayoffMatrix build_payoff_matrix(const Graph& g, Vertex target) {
  const int n = g.size();
  if (target < 0 || target >= n) {
    throw ValidationError("target vertex outside 1.." + std::to_string(n));
  }
  PayoffMatrix m;
  m.target = target;
  for (Vertex v = 0; v < n; ++v) {
    if (v != target) {
      m.attack_actions.push_back(v);
      m.monitor_actions.push_back(v);
    }
  }
  const AdjugateTable table(g);
  m.entries.assign(m.rows(), std::vector<ExtReal>(m.cols()));
  parallel_for(m.rows(), [&](int i) {
    const Vertex a = m.attack_actions[i];
    for (int j = 0; j < m.cols(); ++j) {
      const auto sc =
          AttackScenario::build(g, table, VertexRole{target, a, m.monitor_actions[j]});
      const GainResult r = output_to_output_gain(sc);
      m.entries[i][j] = r.value;
    }
  });
  return m;
}

namespace {

constexpr double kPivotEps = 1e-9;

struct LpResult {
  std::vector<double> x;     // primal solution
  std::vector<double> dual;  // one multiplier per constraint
  double objective = 0.0;
};

// Maximize c.x subject to A x <= b, x >= 0, with b > 0, by the standard
// tableau method with Bland's rule (smallest eligible index enters; ties in
// the ratio test go to the smallest basis index), which cannot cycle.
LpResult simplex_max(const std::vector<std::vector<double>>& a,
                     const std::vector<double>& b, const std::vector<double>& c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  const int width = n + m + 1;
  std::vector<std::vector<double>> t(m, std::vector<double>(width, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1.0;
    t[i][width - 1] = b[i];
  }
  std::vector<double> red(width, 0.0);  // reduced costs; last slot = -objective
  for (int j = 0; j < n; ++j) red[j] = c[j];
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  for (long iter = 0;; ++iter) {
    if (iter > 200000L * (m + n)) throw NumericError("simplex failed to terminate");
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (red[j] > kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= kPivotEps) continue;
      const double ratio = t[i][width - 1] / t[i][enter];
      if (leave < 0 || ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw NumericError("LP is unbounded");

    const double piv = t[leave][enter];
    for (int j = 0; j < width; ++j) t[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0.0) continue;
      const double f = t[i][enter];
      for (int j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    const double f = red[enter];
    for (int j = 0; j < width; ++j) red[j] -= f * t[leave][j];
    basis[leave] = enter;
  }

  LpResult r;
  r.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) r.x[basis[i]] = t[i][width - 1];
  }
  r.dual.assign(m, 0.0);
  for (int i = 0; i < m; ++i) r.dual[i] = -red[n + i];
  r.objective = -red[width - 1];
  return r;
}

}  // namespace

Equilibrium solve_zero_sum(const PayoffMatrix& m) {
  const int rows = m.rows();
  if (rows == 0 || m.cols() == 0) {
    throw ValidationError("payoff matrix has no actions");
  }
  const std::vector<int> feas = m.feasible_columns();
  if (feas.empty()) {
    throw InfeasibleGameError(
        "every monitor action admits an unbounded attack; the game has no value");
  }
  const int cols = static_cast<int>(feas.size());

  Equilibrium eq;
  eq.attack_strategy.assign(rows, 0.0);
  eq.monitor_strategy.assign(m.cols(), 0.0);

  std::vector<std::vector<double>> v(rows, std::vector<double>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) v[i][j] = m.entries[i][feas[j]].value();

  // Pure saddle: maximin == minimax. Detected first so that degenerate
  // games keep exact point-mass strategies.
  double maximin = -std::numeric_limits<double>::infinity();
  double minimax = std::numeric_limits<double>::infinity();
  std::vector<double> row_min(rows), col_max(cols);
  for (int i = 0; i < rows; ++i) {
    row_min[i] = *std::min_element(v[i].begin(), v[i].end());
    maximin = std::max(maximin, row_min[i]);
  }
  for (int j = 0; j < cols; ++j) {
    double cm = v[0][j];
    for (int i = 1; i < rows; ++i) cm = std::max(cm, v[i][j]);
    col_max[j] = cm;
    minimax = std::min(minimax, cm);
  }
  const double tie_tol = 1e-12 * (1.0 + std::abs(maximin));
  if (minimax - maximin <= tie_tol) {
    eq.value = maximin;
    int jstar = -1, istar = -1;
    for (int j = 0; j < cols && jstar < 0; ++j) {
      if (col_max[j] <= minimax + tie_tol) jstar = j;
    }
    for (int i = 0; i < rows && istar < 0; ++i) {
      if (row_min[i] >= maximin - tie_tol) istar = i;
    }
    eq.is_pure = true;
    eq.attack_strategy[istar] = 1.0;
    eq.monitor_strategy[feas[jstar]] = 1.0;
    eq.support_attack = {istar};
    eq.support_monitor = {feas[jstar]};
    return eq;
  }

  // Mixed equilibrium. Shift entries to be >= 1, solve
  //   max sum(x) s.t. M'^T x ... detector: max sum(x), M' x <= 1, x >= 0
  // over columns; the game value is 1/sum(x) minus the shift and the
  // adversary strategy falls out of the duals.
  double lo = v[0][0];
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) lo = std::min(lo, v[i][j]);
  const double shift = lo < 1.0 ? 1.0 - lo : 0.0;

  std::vector<std::vector<double>> a(rows, std::vector<double>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = v[i][j] + shift;
  const LpResult lp =
      simplex_max(a, std::vector<double>(rows, 1.0), std::vector<double>(cols, 1.0));
  if (lp.objective <= 0.0) throw NumericError("game LP returned a nonpositive sum");

  const double value_shifted = 1.0 / lp.objective;
  eq.value = value_shifted - shift;
  eq.is_pure = false;

  double psum = 0.0, qsum = 0.0;
  for (double y : lp.dual) psum += y;
  for (double x : lp.x) qsum += x;
  if (psum <= 0.0 || qsum <= 0.0) throw NumericError("degenerate LP strategies");
  for (int i = 0; i < rows; ++i) eq.attack_strategy[i] = std::max(0.0, lp.dual[i]) / psum;
  for (int j = 0; j < cols; ++j) eq.monitor_strategy[feas[j]] = std::max(0.0, lp.x[j]) / qsum;

  for (int i = 0; i < rows; ++i) {
    if (eq.attack_strategy[i] > 1e-12) eq.support_attack.push_back(i);
  }
  for (int j = 0; j < m.cols(); ++j) {
    if (eq.monitor_strategy[j] > 1e-12) eq.support_monitor.push_back(j);
  }
  return eq;
}

ExtReal expected_payoff(const PayoffMatrix& m, const std::vector<double>& attack_strategy,
                        const std::vector<double>& monitor_strategy) {
  if (static_cast<int>(attack_strategy.size()) != m.rows() ||
      static_cast<int>(monitor_strategy.size()) != m.cols()) {
    throw ValidationError("strategy length does not match the matrix");
  }
  double acc = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    if (attack_strategy[i] <= 0.0) continue;
    for (int j = 0; j < m.cols(); ++j) {
      if (monitor_strategy[j] <= 0.0) continue;
      const ExtReal e = m.entries[i][j];
      if (!e.is_finite()) return ExtReal::infinity();
      acc += attack_strategy[i] * e.value() * monitor_strategy[j];
    }
  }
  return acc;
}

bool verify_saddle(const PayoffMatrix& m, const Equilibrium& eq, double tol) {
  const double v = eq.value;
  // No pure attack row may earn more than v against the monitor mix.
  for (int i = 0; i < m.rows(); ++i) {
    double pay = 0.0;
    bool inf = false;
    for (int j = 0; j < m.cols() && !inf; ++j) {
      if (eq.monitor_strategy[j] <= 1e-15) continue;
      if (!m.entries[i][j].is_finite()) {
        inf = true;
      } else {
        pay += eq.monitor_strategy[j] * m.entries[i][j].value();
      }
    }
    if (inf || pay > v + tol) return false;
  }
  // No feasible pure monitor column may pay less than v against the attack
  // mix. Columns with an unbounded entry are outside the monitor's strategy
  // space no matter how they score against this particular mix.
  for (int j : m.feasible_columns()) {
    double pay = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
      pay += eq.attack_strategy[i] * m.entries[i][j].value();
    }
    if (pay < v - tol) return false;
  }
  return true;
}

bool has_pure_saddle_full(const PayoffMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return false;
  double maximin = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < m.rows(); ++i) {
    double rm = std::numeric_limits<double>::infinity();
    for (int j = 0; j < m.cols(); ++j) rm = std::min(rm, m.entries[i][j].raw());
    maximin = std::max(maximin, rm);
  }
  double minimax = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m.cols(); ++j) {
    double cm = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < m.rows(); ++i) cm = std::max(cm, m.entries[i][j].raw());
    minimax = std::min(minimax, cm);
  }
  if (!std::isfinite(maximin) || !std::isfinite(minimax)) return maximin == minimax;
  return minimax - maximin <= 1e-12 * (1.0 + std::abs(maximin));
}

}  // namespace netgame
