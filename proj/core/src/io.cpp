#include "netgame/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace netgame {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& name, const std::string& what) {
  throw ParseError(name + ": " + what);
}

std::string location_of(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Graph load_graph_json(const std::string& text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(name, "JSON parse error at " + location_of(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail(name, "top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    fail(name, "missing integer field \"n\"");
  }
  const long long n = doc["n"].get<long long>();
  if (n < 1 || n > 1000000) fail(name, "\"n\" must be in 1..1000000");
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    fail(name, "missing array field \"edges\"");
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  size_t k = 0;
  for (const auto& e : doc["edges"]) {
    ++k;
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      fail(name, "edges[" + std::to_string(k) + "] must be a pair of integers");
    }
    const long long a = e[0].get<long long>(), b = e[1].get<long long>();
    if (a < 1 || a > n || b < 1 || b > n) {
      fail(name, "edges[" + std::to_string(k) + "] = [" + std::to_string(a) + "," +
                     std::to_string(b) + "] is outside 1.." + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
  }

  std::vector<double> weights;
  if (doc.contains("weights") && !doc["weights"].is_null()) {
    if (!doc["weights"].is_array()) fail(name, "\"weights\" must be an array");
    for (const auto& w : doc["weights"]) {
      if (!w.is_number()) fail(name, "weights must be numbers");
      weights.push_back(w.get<double>());
    }
  }

  try {
    return Graph(static_cast<int>(n), std::move(edges), std::move(weights));
  } catch (const ValidationError& e) {
    fail(name, e.what());
  }
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph_json(buf.str(), path);
}

std::string format_value(double v) {
  if (std::isinf(v)) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void write_payoff_csv(std::ostream& out, const PayoffMatrix& m) {
  out << "a\\m";
  for (Vertex v : m.monitor_actions) out << ',' << (v + 1);
  out << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    out << (m.attack_actions[i] + 1);
    for (int j = 0; j < m.cols(); ++j) out << ',' << format_value(m.entries[i][j].raw());
    out << '\n';
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  cells.push_back(cur);
  for (auto& c : cells) {
    const auto first = c.find_first_not_of(" \t");
    const auto last = c.find_last_not_of(" \t");
    c = first == std::string::npos ? std::string() : c.substr(first, last - first + 1);
  }
  return cells;
}

[[noreturn]] void cell_fail(const std::string& name, size_t row, size_t col,
                            const std::string& what) {
  throw ParseError(name + ": row " + std::to_string(row) + ", column " +
                   std::to_string(col) + ": " + what);
}

long parse_vertex_id(const std::string& name, size_t row, size_t col,
                     const std::string& cell) {
  try {
    size_t used = 0;
    const long v = std::stol(cell, &used);
    if (used != cell.size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (...) {
    cell_fail(name, row, col, "expected a positive vertex id, got \"" + cell + "\"");
  }
}

}  // namespace

PayoffMatrix read_payoff_csv(std::istream& in, const std::string& name) {
  std::string line;
  std::vector<std::vector<std::string>> table;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    table.push_back(split_csv_line(line));
  }
  if (table.size() < 2) fail(name, "need a header row and at least one payoff row");

  PayoffMatrix m;
  const auto& header = table[0];
  if (header.size() < 2) cell_fail(name, 1, 1, "header needs at least one monitor column");
  for (size_t j = 1; j < header.size(); ++j) {
    m.monitor_actions.push_back(
        static_cast<Vertex>(parse_vertex_id(name, 1, j + 1, header[j]) - 1));
  }
  for (size_t j = 0; j < m.monitor_actions.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      if (m.monitor_actions[i] == m.monitor_actions[j]) {
        cell_fail(name, 1, j + 2, "duplicate monitor id");
      }
    }
  }

  for (size_t r = 1; r < table.size(); ++r) {
    const auto& row = table[r];
    if (row.size() != header.size()) {
      cell_fail(name, r + 1, row.size(), "expected " + std::to_string(header.size()) +
                                             " cells, got " + std::to_string(row.size()));
    }
    const auto attack = static_cast<Vertex>(parse_vertex_id(name, r + 1, 1, row[0]) - 1);
    for (Vertex seen : m.attack_actions) {
      if (seen == attack) cell_fail(name, r + 1, 1, "duplicate attack id");
    }
    m.attack_actions.push_back(attack);
    std::vector<ExtReal> entries;
    for (size_t j = 1; j < row.size(); ++j) {
      if (row[j] == "inf") {
        entries.push_back(ExtReal::infinity());
        continue;
      }
      try {
        size_t used = 0;
        const double v = std::stod(row[j], &used);
        if (used != row[j].size() || !std::isfinite(v) || v < 0.0) {
          throw std::invalid_argument("");
        }
        entries.push_back(v);
      } catch (...) {
        cell_fail(name, r + 1, j + 1,
                  "expected a nonnegative number or \"inf\", got \"" + row[j] + "\"");
      }
    }
    m.entries.push_back(std::move(entries));
  }
  return m;
}

PayoffMatrix read_payoff_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open matrix file " + path);
  return read_payoff_csv(in, path);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points) {
  out << "f_hz,energy_target,energy_monitor,ratio\n";
  for (const auto& p : points) {
    out << format_value(p.f_hz) << ',' << format_value(p.energy_target) << ','
        << format_value(p.energy_monitor) << ',' << format_value(p.ratio) << '\n';
  }
}

void write_trace_csv(std::ostream& out, const SimulationTrace& trace) {
  const size_t n = trace.states.empty() ? 0 : trace.states[0].size();
  out << "t";
  for (size_t i = 1; i <= n; ++i) out << ",x_" << i;
  out << ",y_target,y_monitor\n";
  for (size_t k = 0; k < trace.time.size(); ++k) {
    out << format_value(trace.time[k]);
    for (size_t i = 0; i < n; ++i) out << ',' << format_value(trace.states[k][i]);
    out << ',' << format_value(trace.y_target[k]) << ','
        << format_value(trace.y_monitor[k]) << '\n';
  }
}

}  // namespace netgame
