#include <cmath>
#include <vector>

#include <doctest.h>

#include "netgame/graph.hpp"
#include "netgame/sim.hpp"
#include "netgame/types.hpp"

using namespace netgame;

namespace {

const Graph& k2() {
  static const Graph g(2, {{0, 1}});
  return g;
}

const Graph& p3() {
  static const Graph g(3, {{0, 1}, {1, 2}});
  return g;
}

// Exact response of the single edge driven at vertex 1 by sin(omega t) from
// rest: common mode (1 - cos) / (2 omega), differential mode first order
// with rate 2 and drive sin / 2.
double k2_exact_x0(double t, double omega) {
  const double common = (1.0 - std::cos(omega * t)) / (2.0 * omega);
  const double a = 1.0 / (omega * omega + 4.0);
  const double b = -omega / (2.0 * (omega * omega + 4.0));
  const double diff = a * std::sin(omega * t) + b * std::cos(omega * t) -
                      b * std::exp(-2.0 * t);
  return common + diff;
}

}  // namespace

TEST_CASE("attack signal shapes") {
  const AttackSignal s = AttackSignal::sine(2.0, 0.5);
  CHECK(s(0.0) == doctest::Approx(0.0));
  CHECK(s(0.5) == doctest::Approx(2.0));  // quarter period of 0.5 Hz

  const AttackSignal c = AttackSignal::chirp(1.0, 1.0, 2.0, 4.0);
  CHECK(c(0.0) == doctest::Approx(0.0));

  const AttackSignal z = AttackSignal::sine(0.0, 1.0);
  CHECK(z(0.3) == 0.0);

  const AttackSignal samp = AttackSignal::sampled({0.0, 1.0, 0.0}, 2.0);
  CHECK(samp(0.25) == doctest::Approx(0.5));  // linear interpolation
  CHECK(samp(0.5) == doctest::Approx(1.0));
  CHECK(samp(5.0) == doctest::Approx(0.0));  // past the samples

  CHECK_THROWS_AS(AttackSignal::sine(1.0, -2.0), ValidationError);
  CHECK_THROWS_AS(AttackSignal::sampled({1.0}, 0.0), ValidationError);
  CHECK_THROWS_AS(AttackSignal::chirp(1.0, 1.0, 2.0, -1.0), ValidationError);
}

TEST_CASE("integrator matches the closed form on a single edge") {
  const double omega = 2.0 * 3.14159265358979323846 * 0.3;
  const VertexRole roles{1, 0, 0};
  const auto trace = simulate(k2(), roles, AttackSignal::sine(1.0, 0.3), 2.0, 0.01);
  REQUIRE(!trace.time.empty());
  CHECK(trace.time.back() == doctest::Approx(2.0).epsilon(1e-12));
  const double got = trace.states.back()[0];
  CHECK(got == doctest::Approx(k2_exact_x0(2.0, omega)).epsilon(1e-8));
}

TEST_CASE("integrator converges at fourth order") {
  const double omega = 2.0 * 3.14159265358979323846 * 0.3;
  const VertexRole roles{1, 0, 0};
  const double exact = k2_exact_x0(2.0, omega);
  const auto coarse = simulate(k2(), roles, AttackSignal::sine(1.0, 0.3), 2.0, 0.02);
  const auto fine = simulate(k2(), roles, AttackSignal::sine(1.0, 0.3), 2.0, 0.01);
  const double e1 = std::abs(coarse.states.back()[0] - exact);
  const double e2 = std::abs(fine.states.back()[0] - exact);
  REQUIRE(e2 > 0.0);
  const double order = std::log2(e1 / e2);
  CHECK(order > 3.5);
  CHECK(order < 4.5);
}

TEST_CASE("output energies scale quadratically with amplitude") {
  const VertexRole roles{2, 0, 1};
  const auto one = simulate(p3(), roles, AttackSignal::sine(1.0, 0.4), 10.0, 0.01);
  const auto three = simulate(p3(), roles, AttackSignal::sine(3.0, 0.4), 10.0, 0.01);
  CHECK(three.energy_target ==
        doctest::Approx(9.0 * one.energy_target).epsilon(1e-12));
  CHECK(three.energy_monitor ==
        doctest::Approx(9.0 * one.energy_monitor).epsilon(1e-12));
}

TEST_CASE("trace outputs track the named vertices") {
  const VertexRole roles{2, 0, 1};
  const auto trace = simulate(p3(), roles, AttackSignal::sine(1.0, 0.4), 1.0, 0.01);
  for (size_t k = 0; k < trace.time.size(); ++k) {
    CHECK(trace.y_target[k] == trace.states[k][2]);
    CHECK(trace.y_monitor[k] == trace.states[k][1]);
  }
}

TEST_CASE("too coarse a step is rejected with a suggestion") {
  try {
    simulate(k2(), VertexRole{1, 0, 0}, AttackSignal::sine(1.0, 0.1), 1.0, 10.0);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("too coarse") != std::string::npos);
    CHECK(what.find("suggested") != std::string::npos);
  }
  CHECK_THROWS_AS(
      simulate(k2(), VertexRole{1, 0, 0}, AttackSignal::sine(1.0, 0.1), 1.0, -0.1),
      ValidationError);
  CHECK_THROWS_AS(
      simulate(k2(), VertexRole{1, 0, 0}, AttackSignal::sine(1.0, 0.1), 0.0, 0.01),
      ValidationError);
}

TEST_CASE("zero amplitude is perfectly stealthy") {
  const auto trace = simulate(p3(), VertexRole{2, 0, 1}, AttackSignal::sine(0.0, 1.0),
                              5.0, 0.01);
  CHECK(trace.energy_target == 0.0);
  CHECK(trace.energy_monitor == 0.0);
  CHECK(stealthiness(trace));
}

TEST_CASE("stealthiness compares energy to the threshold") {
  SimulationTrace trace;
  trace.energy_monitor = 0.5;
  CHECK(stealthiness(trace, 1.0));
  CHECK_FALSE(stealthiness(trace, 0.3));
  CHECK_THROWS_AS(stealthiness(trace, 0.0), ValidationError);
}

TEST_CASE("steady-state ratio follows the frequency response") {
  // Ratio of the two frozen channels is 1 / (1 + omega^2).
  const VertexRole roles{2, 0, 1};
  const double horizon = 400.0;

  const auto low = steady_state_point(p3(), roles, 0.05, horizon, 0.01);
  const double w_low = std::pow(2.0 * 3.14159265358979323846 * 0.05, 2);
  CHECK(low.ratio == doctest::Approx(1.0 / (1.0 + w_low)).epsilon(1e-3));

  const auto high = steady_state_point(p3(), roles, 2.0, horizon, 0.01);
  const double w_high = std::pow(2.0 * 3.14159265358979323846 * 2.0, 2);
  CHECK(high.ratio == doctest::Approx(1.0 / (1.0 + w_high)).epsilon(1e-3));
}

TEST_CASE("unbounded direction grows with the square of frequency") {
  // Swapped roles: ratio (1 + omega^2) grows without bound; the log-log
  // slope over one octave is 2.
  const VertexRole roles{1, 0, 2};
  const auto p1 = steady_state_point(p3(), roles, 4.0, 200.0, 0.01);
  const auto p2 = steady_state_point(p3(), roles, 8.0, 200.0, 0.01);
  const double slope = std::log(p2.ratio / p1.ratio) / std::log(2.0);
  CHECK(slope == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("sweep wraps the per-frequency measurement") {
  const VertexRole roles{2, 0, 1};
  const std::vector<double> freqs = {0.1, 0.4};
  const auto points = energy_ratio_sweep(p3(), roles, freqs, 200.0, 0.01);
  REQUIRE(points.size() == 2);
  CHECK(points[0].f_hz == 0.1);
  CHECK(points[1].f_hz == 0.4);
  for (const auto& p : points) {
    CHECK(p.energy_monitor > 0.0);
    CHECK(p.ratio == doctest::Approx(p.energy_target / p.energy_monitor));
  }
  CHECK_THROWS_AS(energy_ratio_sweep(p3(), roles, {0.0}, 200.0, 0.01),
                  ValidationError);
}

TEST_CASE("spectral quantities of small graphs") {
  CHECK(algebraic_connectivity(p3()) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(laplacian_spectral_radius(p3()) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(algebraic_connectivity(k2()) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(laplacian_spectral_radius(k2()) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(suggested_time_step(k2()) == doctest::Approx(0.025).epsilon(1e-9));
  CHECK(suggested_horizon(k2(), 1.0) == doctest::Approx(100.0).epsilon(1e-9));
  CHECK(suggested_horizon(k2(), 0.25) == doctest::Approx(200.0).epsilon(1e-9));
}
