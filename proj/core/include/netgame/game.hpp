#pragma once

// The zero-sum placement game: the adversary picks an attack vertex, the
// detector picks a monitor vertex, the payoff is the worst-case stealthy
// attack gain. Mixed equilibria come from a dense tableau simplex solve.

#include <vector>

#include "netgame/graph.hpp"
#include "netgame/types.hpp"

namespace netgame {

struct PayoffMatrix {
  Vertex target = -1;  // -1 when loaded from a bare matrix file
  std::vector<Vertex> attack_actions;   // row vertices, ascending
  std::vector<Vertex> monitor_actions;  // column vertices, ascending
  std::vector<std::vector<ExtReal>> entries;  // entries[row][col]

  int rows() const { return static_cast<int>(attack_actions.size()); }
  int cols() const { return static_cast<int>(monitor_actions.size()); }
  ExtReal at(int row, int col) const { return entries[row][col]; }

  // Columns without any +inf entry: the detector's admissible actions.
  std::vector<int> feasible_columns() const;
};

// Gains of every (attack, monitor) pair against the given target, at unit
// alarm threshold.
PayoffMatrix build_payoff_matrix(const Graph& g, Vertex target);

struct Equilibrium {
  double value = 0.0;
  std::vector<double> attack_strategy;   // aligned with attack_actions
  std::vector<double> monitor_strategy;  // aligned with monitor_actions
  bool is_pure = false;
  std::vector<int> support_attack;   // row indexes carrying mass
  std::vector<int> support_monitor;  // column indexes carrying mass
};

// Equilibrium of the game restricted to the feasible columns (the detector
// never plays a column with an infinite entry). Pure saddle points are
// detected exactly, lexicographically smallest (monitor, then attack);
// otherwise the mixed equilibrium is computed by LP.
// Throws InfeasibleGameError when no column is feasible.
Equilibrium solve_zero_sum(const PayoffMatrix& m);

// Expected payoff of a mixed strategy pair; +inf when an infinite entry
// carries joint probability mass.
ExtReal expected_payoff(const PayoffMatrix& m, const std::vector<double>& attack_strategy,
                        const std::vector<double>& monitor_strategy);

// Checks that no unilateral deviation to a pure action improves either
// player by more than tol. The attack may deviate to any row; the monitor
// only to feasible columns, the same strategy space solve_zero_sum uses.
bool verify_saddle(const PayoffMatrix& m, const Equilibrium& eq, double tol = 1e-7);

// Pure saddle test over the unrestricted matrix, infinite entries included.
bool has_pure_saddle_full(const PayoffMatrix& m);

}  // namespace netgame
