#pragma once

// Time-domain validation: classical RK4 integration of the attacked
// consensus dynamics, output energies, stealthiness, frequency sweeps.

#include <vector>

#include "netgame/graph.hpp"
#include "netgame/types.hpp"

namespace netgame {

struct AttackSignal {
  enum class Kind { kSine, kChirp, kSamples };

  Kind kind = Kind::kSine;
  double amplitude = 1.0;
  double frequency_hz = 0.0;                          // sine
  double chirp_start_hz = 0.0, chirp_end_hz = 0.0;    // chirp over [0, span]
  double chirp_span = 0.0;
  std::vector<double> samples;                        // sampled, linear interp
  double sample_rate = 0.0;

  double operator()(double t) const;

  static AttackSignal sine(double amplitude, double frequency_hz);
  static AttackSignal chirp(double amplitude, double start_hz, double end_hz,
                            double span_seconds);
  static AttackSignal sampled(std::vector<double> samples, double sample_rate);
};

struct SimulationTrace {
  std::vector<double> time;
  std::vector<std::vector<double>> states;  // states[k] = x(t_k)
  std::vector<double> y_target;
  std::vector<double> y_monitor;
  double energy_target = 0.0;   // trapezoid integral of y^2 over the horizon
  double energy_monitor = 0.0;
};

// Integrate x' = -L x + e_attack * u(t), x(0) = 0, over [0, horizon] with a
// uniform step of at most dt (the step divides the horizon exactly).
// Steps above the accuracy bound 0.1 / lambda_max are rejected with a
// suggested replacement.
SimulationTrace simulate(const Graph& g, VertexRole roles, const AttackSignal& signal,
                         double horizon, double dt);

// True when the monitored output energy stays below the alarm threshold.
bool stealthiness(const SimulationTrace& trace, double delta = 1.0);

struct SweepPoint {
  double f_hz = 0.0;
  double energy_target = 0.0;
  double energy_monitor = 0.0;
  double ratio = 0.0;
};

// Steady-state energy ratio at one sine frequency: the first 20% of the
// horizon is discarded as transient and the measurement window is trimmed
// to whole periods. Energies are taken about the window mean, which removes
// the constant common-mode offset left by the Laplacian's zero eigenvalue
// and isolates the sinusoidal response. dt is an upper bound; high
// frequencies are integrated with a finer step (at least 40 samples per
// period).
SweepPoint steady_state_point(const Graph& g, VertexRole roles, double f_hz,
                              double horizon, double dt);

// steady_state_point at each frequency; frequencies must be positive.
std::vector<SweepPoint> energy_ratio_sweep(const Graph& g, VertexRole roles,
                                           const std::vector<double>& frequencies_hz,
                                           double horizon, double dt);

double algebraic_connectivity(const Graph& g);    // second-smallest Laplacian eigenvalue
double laplacian_spectral_radius(const Graph& g); // largest Laplacian eigenvalue

double suggested_time_step(const Graph& g);  // 0.05 / lambda_max
// max(200 / lambda_2, 50 periods of the lowest frequency of interest).
double suggested_horizon(const Graph& g, double lowest_hz);

}  // namespace netgame
