// Command-line front end: graph analysis, worst-case gains, the placement
// game, and time-domain experiments. Vertex ids are 1-based on this side.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netgame/game.hpp"
#include "netgame/graph.hpp"
#include "netgame/io.hpp"
#include "netgame/lti.hpp"
#include "netgame/oog.hpp"
#include "netgame/sim.hpp"
#include "netgame/types.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace netgame;

namespace {

json id_list(const std::vector<Vertex>& vertices) {
  json out = json::array();
  for (Vertex v : vertices) out.push_back(v + 1);
  return out;
}

json gain_value(ExtReal v, double delta) {
  if (!v.is_finite()) return "inf";
  return v.value() * delta;
}

json omega_field(const GainResult& r) {
  switch (r.omega_kind) {
    case GainResult::OmegaKind::kFinite:
      return r.omega_star;
    case GainResult::OmegaKind::kInfinity:
      return "infinity";
    case GainResult::OmegaKind::kNone:
      return nullptr;
  }
  return nullptr;
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << content;
}

fs::path prepare_out_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw ValidationError("cannot create output directory " + dir);
  return p;
}

PayoffMatrix scaled(PayoffMatrix m, double delta) {
  for (auto& row : m.entries) {
    for (auto& e : row) {
      if (e.is_finite()) e = ExtReal(e.value() * delta);
    }
  }
  return m;
}

json equilibrium_report(const PayoffMatrix& m, const Equilibrium& eq, double delta) {
  json rep;
  rep["target"] = m.target >= 0 ? json(m.target + 1) : json(nullptr);
  rep["delta"] = delta;
  rep["value"] = eq.value;
  rep["pure"] = eq.is_pure;
  rep["attack_actions"] = id_list(m.attack_actions);
  rep["monitor_actions"] = id_list(m.monitor_actions);
  rep["attack_strategy"] = eq.attack_strategy;
  rep["monitor_strategy"] = eq.monitor_strategy;
  json sa = json::array(), sm = json::array();
  for (int i : eq.support_attack) sa.push_back(m.attack_actions[i] + 1);
  for (int j : eq.support_monitor) sm.push_back(m.monitor_actions[j] + 1);
  rep["support_attack"] = sa;
  rep["support_monitor"] = sm;
  json feas = json::array();
  for (int j : m.feasible_columns()) feas.push_back(m.monitor_actions[j] + 1);
  rep["feasible_monitors"] = feas;
  rep["full_matrix_pure_saddle"] = has_pure_saddle_full(m);
  return rep;
}

int solve_and_report(const PayoffMatrix& m, double delta, const std::string& out_dir) {
  const Equilibrium eq = solve_zero_sum(m);
  const json rep = equilibrium_report(m, eq, delta);
  std::cout << rep.dump(2) << '\n';
  write_text_file(prepare_out_dir(out_dir) / "equilibrium.json", rep.dump(2) + "\n");
  return 0;
}

int cmd_analyze(const std::string& graph_path, int target1, const std::string& out_dir,
                bool write_files) {
  const Graph g = load_graph_file(graph_path);
  const Vertex target = target1 - 1;
  const auto feasible = feasible_monitor_set(g, target);

  std::vector<Vertex> algebraic;
  for (Vertex m = 0; m < g.size(); ++m) {
    if (m != target && algebraic_monitor_condition(g, target, m)) algebraic.push_back(m);
  }

  const AdjugateTable table(g);
  json channels = json::array();
  bool all_clear = true;
  for (Vertex a = 0; a < g.size(); ++a) {
    if (a == target) continue;
    for (Vertex u = 0; u < g.size(); ++u) {
      const int r = relative_degree(g, u, a);
      const ZeroSet zs{find_roots(table.numerator(u, a)), r};
      json ch;
      ch["input"] = a + 1;
      ch["output"] = u + 1;
      ch["relative_degree"] = r;
      json zeros = json::array();
      for (const auto& z : zs.finite_zeros) zeros.push_back({z.real(), z.imag()});
      ch["finite_zeros"] = zeros;
      const bool clear = check_no_closed_positive_real_zeros(zs);
      ch["no_closed_positive_real_zeros"] = clear;
      all_clear = all_clear && clear;
      channels.push_back(std::move(ch));
    }
  }

  json rep;
  rep["n"] = g.size();
  rep["target"] = target1;
  rep["feasible_monitors"] = id_list(feasible);
  rep["algebraic_condition_monitors"] = id_list(algebraic);
  rep["channels"] = channels;
  rep["all_channels_clear_of_positive_real_zeros"] = all_clear;

  std::cout << rep.dump(2) << '\n';
  if (write_files) {
    write_text_file(prepare_out_dir(out_dir) / "analysis.json", rep.dump(2) + "\n");
  }
  if (feasible.empty()) {
    std::cerr << "no feasible monitor placement exists for target " << target1 << "\n";
    return 3;
  }
  return 0;
}

int cmd_oog(const std::string& graph_path, int target1, int attack1, int monitor1,
            double delta) {
  const Graph g = load_graph_file(graph_path);
  const auto sc =
      AttackScenario::build(g, VertexRole{target1 - 1, attack1 - 1, monitor1 - 1});
  const GainResult r = output_to_output_gain(sc);
  json rep;
  rep["target"] = target1;
  rep["attack"] = attack1;
  rep["monitor"] = monitor1;
  rep["delta"] = delta;
  rep["value"] = gain_value(r.value, delta);
  rep["omega_star"] = omega_field(r);
  rep["reason"] = to_string(r.reason);
  std::cout << rep.dump(2) << '\n';
  return 0;
}

int cmd_game(const std::string& graph_path, int target1, double delta,
             const std::string& out_dir) {
  const Graph g = load_graph_file(graph_path);
  const PayoffMatrix built = scaled(build_payoff_matrix(g, target1 - 1), delta);

  // The CSV is the interface: serialize at the file precision, then solve
  // what was written so --matrix-in reproduces this equilibrium exactly.
  std::ostringstream csv;
  write_payoff_csv(csv, built);
  write_text_file(prepare_out_dir(out_dir) / "payoff.csv", csv.str());
  std::istringstream back(csv.str());
  PayoffMatrix m = read_payoff_csv(back, "payoff.csv");
  m.target = built.target;

  return solve_and_report(m, delta, out_dir);
}

int cmd_nash(const std::string& matrix_path, const std::string& out_dir) {
  return solve_and_report(read_payoff_file(matrix_path), 1.0, out_dir);
}

int cmd_simulate(const std::string& graph_path, int target1, int attack1, int monitor1,
                 double freq, double amplitude, double chirp_to, double horizon,
                 double dt, double delta, bool want_trace, const std::string& out_dir) {
  const Graph g = load_graph_file(graph_path);
  const VertexRole roles{target1 - 1, attack1 - 1, monitor1 - 1};
  if (dt <= 0.0) dt = suggested_time_step(g);
  if (horizon <= 0.0) horizon = suggested_horizon(g, freq);

  const AttackSignal sig = chirp_to > 0.0
                               ? AttackSignal::chirp(amplitude, freq, chirp_to, horizon)
                               : AttackSignal::sine(amplitude, freq);
  const SimulationTrace trace = simulate(g, roles, sig, horizon, dt);

  json rep;
  rep["target"] = target1;
  rep["attack"] = attack1;
  rep["monitor"] = monitor1;
  rep["signal"] = chirp_to > 0.0 ? "chirp" : "sine";
  rep["f_hz"] = freq;
  rep["amplitude"] = amplitude;
  rep["horizon"] = horizon;
  rep["dt"] = dt;
  rep["delta"] = delta;
  rep["energy_target"] = trace.energy_target;
  rep["energy_monitor"] = trace.energy_monitor;
  rep["stealthy"] = stealthiness(trace, delta);
  std::cout << rep.dump(2) << '\n';

  if (want_trace) {
    std::ofstream out(prepare_out_dir(out_dir) / "trace.csv");
    if (!out) throw ValidationError("cannot write trace.csv");
    write_trace_csv(out, trace);
  }
  return 0;
}

int cmd_sweep(const std::string& graph_path, int target1, int attack1, int monitor1,
              double fmin, double fmax, int steps, double horizon, double dt,
              double delta, const std::string& out_dir) {
  const Graph g = load_graph_file(graph_path);
  const VertexRole roles{target1 - 1, attack1 - 1, monitor1 - 1};
  if (fmin <= 0.0 || fmax <= 0.0) {
    throw ValidationError("sweep frequencies must be positive");
  }
  if (fmax < fmin) throw ValidationError("--freq-max must be >= --freq-min");
  if (steps < 1) throw ValidationError("--freq-steps must be >= 1");
  if (dt <= 0.0) dt = suggested_time_step(g);
  if (horizon <= 0.0) horizon = suggested_horizon(g, fmin);

  std::vector<double> freqs(steps);
  for (int k = 0; k < steps; ++k) {
    freqs[k] = steps == 1 ? fmin
                          : std::exp(std::log(fmin) +
                                     (std::log(fmax) - std::log(fmin)) * k / (steps - 1));
  }
  const auto points = energy_ratio_sweep(g, roles, freqs, horizon, dt);

  std::ofstream out(prepare_out_dir(out_dir) / "sweep.csv");
  if (!out) throw ValidationError("cannot write sweep.csv");
  write_sweep_csv(out, points);

  for (const auto& p : points) {
    std::cout << "f=" << format_value(p.f_hz) << " Hz  ratio=" << format_value(p.ratio)
              << "  stealthy(delta=" << format_value(delta)
              << ")=" << (p.energy_monitor < delta ? "yes" : "no") << '\n';
  }
  std::cout << "wrote " << (fs::path(out_dir) / "sweep.csv").string() << " (" << points.size()
            << " points)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"worst-case stealthy-attack analysis on consensus networks"};
  app.require_subcommand(1);

  std::string graph_path, out_dir = ".", matrix_in;
  int target = 0, attack = 0, monitor = 0;
  double delta = 1.0, freq = 0.0, freq_end = 0.0, amplitude = 1.0;
  double fmin = 0.0, fmax = 0.0, horizon = 0.0, dt = 0.0;
  int fsteps = 40;
  bool want_trace = false;

  const auto add_graph = [&](CLI::App* c) {
    c->add_option("--graph", graph_path, "graph JSON file")->required();
  };
  const auto add_target = [&](CLI::App* c) {
    c->add_option("--target", target, "target vertex id (1-based)")->required();
  };
  const auto add_pair = [&](CLI::App* c) {
    c->add_option("--attack", attack, "attack vertex id (1-based)")->required();
    c->add_option("--monitor", monitor, "monitor vertex id (1-based)")->required();
  };
  const auto add_delta = [&](CLI::App* c) {
    c->add_option("--delta", delta, "alarm threshold (default 1)");
  };
  const auto add_out = [&](CLI::App* c) {
    c->add_option("--out-dir", out_dir, "directory for file outputs (default .)");
  };

  auto* analyze = app.add_subcommand(
      "analyze", "feasibility report: monitors, relative degrees, channel zeros");
  add_graph(analyze);
  add_target(analyze);
  add_out(analyze);

  auto* oog = app.add_subcommand("oog", "worst-case gain of one scenario");
  add_graph(oog);
  add_target(oog);
  add_pair(oog);
  add_delta(oog);

  auto* game = app.add_subcommand("game", "build and solve the placement game");
  game->add_option("--graph", graph_path, "graph JSON file");
  game->add_option("--target", target, "target vertex id (1-based)");
  game->add_option("--matrix-in", matrix_in, "solve a payoff CSV instead of a graph");
  add_delta(game);
  add_out(game);

  auto* nash = app.add_subcommand("nash", "solve a payoff matrix from CSV");
  nash->add_option("--matrix-in", matrix_in, "payoff CSV file")->required();
  add_out(nash);

  auto* simulate = app.add_subcommand("simulate", "integrate one attack scenario");
  add_graph(simulate);
  add_target(simulate);
  add_pair(simulate);
  simulate->add_option("--freq", freq, "attack frequency in Hz")->required();
  simulate->add_option("--amplitude", amplitude, "attack amplitude (default 1)");
  simulate->add_option("--chirp-to", freq_end, "chirp up to this frequency over the horizon");
  simulate->add_option("--horizon", horizon, "simulation horizon in seconds");
  simulate->add_option("--dt", dt, "integration step");
  simulate->add_flag("--trace", want_trace, "write trace.csv (large)");
  add_delta(simulate);
  add_out(simulate);

  auto* sweep = app.add_subcommand("sweep", "energy ratio across a frequency band");
  add_graph(sweep);
  add_target(sweep);
  add_pair(sweep);
  sweep->add_option("--freq-min", fmin, "lowest frequency in Hz")->required();
  sweep->add_option("--freq-max", fmax, "highest frequency in Hz")->required();
  sweep->add_option("--freq-steps", fsteps, "number of grid points (default 40)");
  sweep->add_option("--horizon", horizon, "simulation horizon in seconds");
  sweep->add_option("--dt", dt, "integration step upper bound");
  add_delta(sweep);
  add_out(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      return cmd_analyze(graph_path, target, out_dir, analyze->count("--out-dir") > 0);
    }
    if (app.got_subcommand(oog)) {
      return cmd_oog(graph_path, target, attack, monitor, delta);
    }
    if (app.got_subcommand(game)) {
      if (!matrix_in.empty()) return cmd_nash(matrix_in, out_dir);
      if (graph_path.empty() || game->count("--target") == 0) {
        throw ValidationError("game needs --graph and --target (or --matrix-in)");
      }
      return cmd_game(graph_path, target, delta, out_dir);
    }
    if (app.got_subcommand(nash)) {
      return cmd_nash(matrix_in, out_dir);
    }
    if (app.got_subcommand(simulate)) {
      return cmd_simulate(graph_path, target, attack, monitor, freq, amplitude, freq_end,
                          horizon, dt, delta, want_trace, out_dir);
    }
    if (app.got_subcommand(sweep)) {
      return cmd_sweep(graph_path, target, attack, monitor, fmin, fmax, fsteps, horizon,
                       dt, delta, out_dir);
    }
  } catch (const InfeasibleGameError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
