#pragma once

// File formats. Graphs arrive as JSON ({"n": ..., "edges": [[i, j], ...],
// "weights": [...]}, 1-based ids); payoff matrices and sweep results travel
// as CSV. Parse failures raise ParseError with a location.

#include <iosfwd>
#include <string>

#include "netgame/game.hpp"
#include "netgame/graph.hpp"
#include "netgame/sim.hpp"

namespace netgame {

Graph load_graph_json(const std::string& text, const std::string& name = "<graph>");
Graph load_graph_file(const std::string& path);

// CSV layout: header "a\\m,<monitor ids>"; one row per attack vertex. All
// values carry 6 significant digits; unbounded entries are the literal
// "inf". Ids are 1-based.
void write_payoff_csv(std::ostream& out, const PayoffMatrix& m);
PayoffMatrix read_payoff_csv(std::istream& in, const std::string& name = "<matrix>");
PayoffMatrix read_payoff_file(const std::string& path);

void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points);
void write_trace_csv(std::ostream& out, const SimulationTrace& trace);

// "%.6g", with +inf rendered as "inf".
std::string format_value(double v);

}  // namespace netgame
