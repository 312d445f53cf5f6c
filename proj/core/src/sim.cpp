#include "netgame/sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace netgame {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

void check_roles(const Graph& g, VertexRole roles) {
  const int n = g.size();
  for (Vertex v : {roles.target, roles.attack, roles.monitor}) {
    if (v < 0 || v >= n) {
      throw ValidationError("role vertex outside 1.." + std::to_string(n));
    }
  }
  if (roles.attack == roles.target || roles.monitor == roles.target) {
    throw ValidationError("attack and monitor must differ from the target");
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

double AttackSignal::operator()(double t) const {
  switch (kind) {
    case Kind::kSine:
      return amplitude * std::sin(kTau * frequency_hz * t);
    case Kind::kChirp: {
      // Linear frequency ramp start -> end over [0, span]; held at the end
      // frequency afterwards so the signal stays continuous.
      if (t <= chirp_span || chirp_span <= 0.0) {
        const double k = chirp_span > 0.0 ? (chirp_end_hz - chirp_start_hz) / chirp_span : 0.0;
        return amplitude * std::sin(kTau * (chirp_start_hz * t + 0.5 * k * t * t));
      }
      const double phase_end =
          chirp_start_hz * chirp_span + 0.5 * (chirp_end_hz - chirp_start_hz) * chirp_span;
      return amplitude * std::sin(kTau * (phase_end + chirp_end_hz * (t - chirp_span)));
    }
    case Kind::kSamples: {
      if (samples.empty() || sample_rate <= 0.0) return 0.0;
      const double pos = t * sample_rate;
      if (pos <= 0.0) return amplitude * samples.front();
      const auto last = static_cast<double>(samples.size() - 1);
      if (pos >= last) return t * sample_rate > last ? 0.0 : amplitude * samples.back();
      const auto i = static_cast<size_t>(pos);
      const double frac = pos - static_cast<double>(i);
      return amplitude * ((1.0 - frac) * samples[i] + frac * samples[i + 1]);
    }
  }
  return 0.0;
}

AttackSignal AttackSignal::sine(double amplitude, double frequency_hz) {
  if (!(frequency_hz >= 0.0)) throw ValidationError("sine frequency must be >= 0");
  AttackSignal s;
  s.kind = Kind::kSine;
  s.amplitude = amplitude;
  s.frequency_hz = frequency_hz;
  return s;
}

AttackSignal AttackSignal::chirp(double amplitude, double start_hz, double end_hz,
                                 double span_seconds) {
  if (!(start_hz >= 0.0) || !(end_hz >= 0.0) || !(span_seconds > 0.0)) {
    throw ValidationError("chirp needs nonnegative frequencies and a positive span");
  }
  AttackSignal s;
  s.kind = Kind::kChirp;
  s.amplitude = amplitude;
  s.chirp_start_hz = start_hz;
  s.chirp_end_hz = end_hz;
  s.chirp_span = span_seconds;
  return s;
}

AttackSignal AttackSignal::sampled(std::vector<double> samples, double sample_rate) {
  if (!(sample_rate > 0.0)) throw ValidationError("sample rate must be positive");
  AttackSignal s;
  s.kind = Kind::kSamples;
  s.samples = std::move(samples);
  s.sample_rate = sample_rate;
  return s;
}

namespace {

// Trapezoid-weighted second moment about the running weighted mean. The
// sweep needs the oscillation energy of an output riding on a constant
// common-mode offset that can exceed the oscillation by nine orders of
// magnitude; computing integral(y^2) - mean^2 * length cancels
// catastrophically there (one rounding of mean^2 already swamps the
// result), so the moments are updated incrementally instead.
struct WindowMoments {
  double wsum = 0.0, mean = 0.0, m2 = 0.0;
  void add(double w, double x) {
    wsum += w;
    const double delta = x - mean;
    mean += (w / wsum) * delta;
    m2 += w * delta * (x - mean);
  }
};

// Core RK4 loop. When `trace` is null, windowed moments over
// [window_start, horizon] are accumulated instead of a trace.
struct EnergyAccumulator {
  double window_start = 0.0;
  WindowMoments target, monitor;
};

void integrate(const Graph& g, VertexRole roles, const AttackSignal& u, double horizon,
               double dt, SimulationTrace* trace, EnergyAccumulator* acc) {
  const int n = g.size();
  const MatD l = laplacian(g);
  const long steps = std::max(1L, std::lround(std::ceil(horizon / dt - 1e-9)));
  const double h = horizon / static_cast<double>(steps);

  std::vector<double> x(n, 0.0), k1(n), k2(n), k3(n), k4(n), tmp(n);
  const auto deriv = [&](const std::vector<double>& s, double t, std::vector<double>& out) {
    for (int i = 0; i < n; ++i) {
      double accum = 0.0;
      const double* row = &l.data()[static_cast<size_t>(i) * n];
      for (int j = 0; j < n; ++j) accum -= row[j] * s[j];
      out[i] = accum;
    }
    out[roles.attack] += u(t);
  };

  double yt_prev = 0.0, ym_prev = 0.0;
  if (trace) {
    trace->time.reserve(steps + 1);
    trace->states.reserve(steps + 1);
    trace->y_target.reserve(steps + 1);
    trace->y_monitor.reserve(steps + 1);
    trace->time.push_back(0.0);
    trace->states.push_back(x);
    trace->y_target.push_back(0.0);
    trace->y_monitor.push_back(0.0);
  }

  for (long k = 0; k < steps; ++k) {
    const double t = h * static_cast<double>(k);
    deriv(x, t, k1);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
    deriv(tmp, t + 0.5 * h, k2);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
    deriv(tmp, t + 0.5 * h, k3);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
    deriv(tmp, t + h, k4);
    for (int i = 0; i < n; ++i) {
      x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }

    const double yt = x[roles.target], ym = x[roles.monitor];
    const double et = 0.5 * h * (yt_prev * yt_prev + yt * yt);
    const double em = 0.5 * h * (ym_prev * ym_prev + ym * ym);
    if (acc && t + h > acc->window_start) {
      acc->target.add(0.5 * h, yt_prev);
      acc->target.add(0.5 * h, yt);
      acc->monitor.add(0.5 * h, ym_prev);
      acc->monitor.add(0.5 * h, ym);
    }
    if (trace) {
      trace->time.push_back(t + h);
      trace->states.push_back(x);
      trace->y_target.push_back(yt);
      trace->y_monitor.push_back(ym);
      trace->energy_target += et;
      trace->energy_monitor += em;
    }
    yt_prev = yt;
    ym_prev = ym;
  }
}

void check_step(const Graph& g, double horizon, double dt) {
  if (!(horizon > 0.0)) throw ValidationError("horizon must be positive");
  if (!(dt > 0.0)) throw ValidationError("dt must be positive");
  const double lmax = laplacian_spectral_radius(g);
  const double bound = 0.1 / lmax;
  if (dt > bound * (1.0 + 1e-12)) {
    throw ValidationError("dt = " + fmt(dt) + " is too coarse for this graph; use dt <= " +
                          fmt(bound) + " (suggested " + fmt(0.5 * bound) + ")");
  }
}

}  // namespace

SimulationTrace simulate(const Graph& g, VertexRole roles, const AttackSignal& signal,
                         double horizon, double dt) {
  check_roles(g, roles);
  check_step(g, horizon, dt);
  SimulationTrace trace;
  integrate(g, roles, signal, horizon, dt, &trace, nullptr);
  return trace;
}

bool stealthiness(const SimulationTrace& trace, double delta) {
  if (!(delta > 0.0)) throw ValidationError("alarm threshold must be positive");
  return trace.energy_monitor < delta;
}

SweepPoint steady_state_point(const Graph& g, VertexRole roles, double f_hz,
                              double horizon, double dt) {
  check_roles(g, roles);
  if (!(f_hz > 0.0)) {
    throw ValidationError("sweep frequency must be positive, got " + fmt(f_hz));
  }
  const double step = std::min(dt, 1.0 / (40.0 * f_hz));
  check_step(g, horizon, step);

  // Discard the first 20% as transient, then trim the window to an integer
  // number of periods so partial cycles do not bias the energies.
  const double period = 1.0 / f_hz;
  const double raw_window = 0.8 * horizon;
  const double whole = std::floor(raw_window / period + 1e-9);
  EnergyAccumulator acc;
  acc.window_start = whole >= 1.0 ? horizon - whole * period : 0.2 * horizon;

  integrate(g, roles, AttackSignal::sine(1.0, f_hz), horizon, step, nullptr, &acc);

  // The Laplacian's zero eigenvalue integrates the attack into a constant
  // common-mode offset that never decays. The sinusoidal response rides on
  // top of it, so the oscillation energy is the windowed second moment about
  // the window mean. Over whole periods the mean captures exactly that
  // offset.
  SweepPoint p;
  p.f_hz = f_hz;
  p.energy_target = std::max(acc.target.m2, 0.0);
  p.energy_monitor = std::max(acc.monitor.m2, 0.0);
  if (p.energy_monitor <= 0.0) {
    throw NumericError("monitor output energy vanished in the sweep window");
  }
  p.ratio = p.energy_target / p.energy_monitor;
  return p;
}

std::vector<SweepPoint> energy_ratio_sweep(const Graph& g, VertexRole roles,
                                           const std::vector<double>& frequencies_hz,
                                           double horizon, double dt) {
  if (frequencies_hz.empty()) throw ValidationError("sweep needs at least one frequency");
  std::vector<SweepPoint> out;
  out.reserve(frequencies_hz.size());
  for (double f : frequencies_hz) {
    out.push_back(steady_state_point(g, roles, f, horizon, dt));
  }
  return out;
}

double algebraic_connectivity(const Graph& g) {
  const auto ev = symmetric_eigenvalues(laplacian(g));
  return ev.size() > 1 ? ev[1] : 0.0;
}

double laplacian_spectral_radius(const Graph& g) {
  const auto ev = symmetric_eigenvalues(laplacian(g));
  return ev.empty() ? 0.0 : ev.back();
}

double suggested_time_step(const Graph& g) {
  return 0.05 / laplacian_spectral_radius(g);
}

double suggested_horizon(const Graph& g, double lowest_hz) {
  const double settle = 200.0 / algebraic_connectivity(g);
  if (!(lowest_hz > 0.0)) return settle;
  return std::max(settle, 50.0 / lowest_hz);
}

}  // namespace netgame
