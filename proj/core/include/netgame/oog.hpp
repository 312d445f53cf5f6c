#pragma once

// Worst-case impact of a stealthy attack on one scenario: the supremum over
// attack signals of the target output energy subject to unit monitor output
// energy. Computed exactly from the critical points of the squared
// frequency-response ratio, with a grid-search oracle as an independent
// lower bound.

#include <vector>

#include "netgame/lti.hpp"

namespace netgame {

// Polynomial in w = omega^2 whose value is |P(j omega)|^2.
struct SpectralPolynomial {
  Polynomial poly;
};

SpectralPolynomial magnitude_squared(const Polynomial& p);

struct GainResult {
  enum class Reason {
    kBounded,
    kRelativeDegreeViolation,   // monitor channel rolls off faster
    kImaginaryAxisMonitorZero,  // monitor channel blind at a finite frequency
  };
  enum class OmegaKind { kFinite, kInfinity, kNone };

  ExtReal value;
  Reason reason = Reason::kBounded;
  OmegaKind omega_kind = OmegaKind::kNone;
  double omega_star = 0.0;  // meaningful iff omega_kind == kFinite

  bool bounded() const { return reason == Reason::kBounded; }
};

const char* to_string(GainResult::Reason r);

GainResult output_to_output_gain(const AttackScenario& sc);

// Max of |x_target|^2 / |x_monitor|^2 for x = (j omega I + L)^{-1} e_attack
// over a log-spaced grid of n_points frequencies in [1e-6, omega_max]. A
// certified lower bound on the true gain; grid points where the monitor
// response underflows are skipped with a warning.
double grid_gain_oracle(const AttackScenario& sc, double omega_max, int n_points);

// Bulk variant sharing one factorization per grid point across every input
// vertex: result[a](u, v) is the grid maximum of |x_u|^2 / |x_v|^2 with
// x = (j omega I + L)^{-1} e_a.
std::vector<MatD> grid_gain_tables(const Graph& g, double omega_max, int n_points);

}  // namespace netgame
