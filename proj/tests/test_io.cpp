#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include <doctest.h>

#include "helpers.hpp"
#include "netgame/io.hpp"
#include "netgame/types.hpp"

using namespace netgame;

namespace {

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("graph json ids are 1-based on disk") {
  const Graph g = load_graph_file(test_support::data_path("p3.json"));
  CHECK(g.size() == 3);
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edges()[0] == std::pair<Vertex, Vertex>{0, 1});
  CHECK(g.edges()[1] == std::pair<Vertex, Vertex>{1, 2});
  CHECK(g.unit_weights());
}

TEST_CASE("graph json carries weights") {
  const Graph g = load_graph_json(R"({"n": 2, "edges": [[1, 2]], "weights": [2.5]})");
  CHECK_FALSE(g.unit_weights());
  REQUIRE(g.weights().size() == 1);
  CHECK(g.weights()[0] == 2.5);

  const Graph unit =
      load_graph_json(R"({"n": 2, "edges": [[1, 2]], "weights": [1.0]})");
  CHECK(unit.unit_weights());
}

TEST_CASE("graph json rejects malformed documents") {
  const std::string syntax = message_of(
      [] { load_graph_file(test_support::data_path("bad_syntax.json")); });
  CHECK(syntax.find("JSON parse error at line") != std::string::npos);

  const std::string vertex = message_of(
      [] { load_graph_file(test_support::data_path("bad_vertex.json")); });
  CHECK(vertex.find("outside 1..3") != std::string::npos);

  const std::string split = message_of(
      [] { load_graph_file(test_support::data_path("disconnected.json")); });
  CHECK(split.find("disconnected") != std::string::npos);

  CHECK_THROWS_AS(load_graph_json("[1, 2]"), ParseError);
  CHECK_THROWS_AS(load_graph_json(R"({"edges": []})"), ParseError);
  CHECK_THROWS_AS(load_graph_json(R"({"n": 0, "edges": []})"), ParseError);
  CHECK_THROWS_AS(load_graph_json(R"({"n": 2})"), ParseError);
  CHECK_THROWS_AS(load_graph_json(R"({"n": 2, "edges": [[1]]})"), ParseError);
  CHECK_THROWS_AS(load_graph_json(R"({"n": 2, "edges": [[1, 2]], "weights": 3})"),
                  ParseError);
  CHECK_THROWS_AS(
      load_graph_json(R"({"n": 2, "edges": [[1, 2]], "weights": ["x"]})"),
      ParseError);

  const std::string named =
      message_of([] { load_graph_json("{", "mygraph.json"); });
  CHECK(named.rfind("mygraph.json: ", 0) == 0);

  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.json"), ValidationError);
}

TEST_CASE("values render with six significant digits") {
  CHECK(format_value(1.46691) == "1.46691");
  CHECK(format_value(0.5) == "0.5");
  CHECK(format_value(1234567.0) == "1.23457e+06");
  CHECK(format_value(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("payoff csv round-trips exactly") {
  PayoffMatrix m;
  m.monitor_actions = {2, 5};
  m.attack_actions = {0, 1, 3};
  m.entries = {{ExtReal(1.5), ExtReal::infinity()},
               {ExtReal(0.25), ExtReal(2.0)},
               {ExtReal(100000.0), ExtReal(0.001)}};

  std::ostringstream first;
  write_payoff_csv(first, m);
  CHECK(first.str() ==
        "a\\m,3,6\n"
        "1,1.5,inf\n"
        "2,0.25,2\n"
        "4,100000,0.001\n");

  std::istringstream in(first.str());
  const PayoffMatrix back = read_payoff_csv(in);
  CHECK(back.target == -1);
  CHECK(back.monitor_actions == m.monitor_actions);
  CHECK(back.attack_actions == m.attack_actions);
  REQUIRE(back.rows() == 3);
  CHECK(back.at(0, 1).is_finite() == false);
  CHECK(back.at(2, 0).value() == 100000.0);

  std::ostringstream second;
  write_payoff_csv(second, back);
  CHECK(second.str() == first.str());
}

TEST_CASE("payoff csv tolerates blank lines and padding") {
  std::istringstream in("a\\m, 2 ,3\n\n1, 0.5 ,inf\n   \n4,1,2\n");
  const PayoffMatrix m = read_payoff_csv(in);
  CHECK(m.monitor_actions == std::vector<Vertex>{1, 2});
  CHECK(m.attack_actions == std::vector<Vertex>{0, 3});
  CHECK(m.at(0, 0).value() == 0.5);
  CHECK_FALSE(m.at(0, 1).is_finite());
}

TEST_CASE("payoff csv reports cell coordinates on failure") {
  const auto read = [](const std::string& text) {
    std::istringstream in(text);
    read_payoff_csv(in, "m.csv");
  };

  const std::string bad_cell =
      message_of([&] { read("a\\m,1,2\n3,0.5,abc\n"); });
  CHECK(bad_cell.find("m.csv: row 2, column 3") != std::string::npos);
  CHECK(bad_cell.find("nonnegative number") != std::string::npos);

  const std::string negative =
      message_of([&] { read("a\\m,1\n3,-1\n"); });
  CHECK(negative.find("row 2, column 2") != std::string::npos);

  const std::string dup_monitor =
      message_of([&] { read("a\\m,1,1\n3,0.5,0.5\n"); });
  CHECK(dup_monitor.find("duplicate monitor id") != std::string::npos);

  const std::string dup_attack =
      message_of([&] { read("a\\m,1\n3,0.5\n3,0.5\n"); });
  CHECK(dup_attack.find("duplicate attack id") != std::string::npos);

  const std::string ragged =
      message_of([&] { read("a\\m,1,2\n3,0.5\n"); });
  CHECK(ragged.find("expected 3 cells, got 2") != std::string::npos);

  const std::string bad_id = message_of([&] { read("a\\m,zero\n3,1\n"); });
  CHECK(bad_id.find("positive vertex id") != std::string::npos);

  CHECK_THROWS_AS(read("a\\m,1\n"), ParseError);
  CHECK_THROWS_AS(read("a\\m\n3\n"), ParseError);
  CHECK_THROWS_AS(read_payoff_file("/nonexistent/matrix.csv"), ValidationError);
}

TEST_CASE("sweep csv lists one row per frequency") {
  std::vector<SweepPoint> points(2);
  points[0] = {0.5, 2.0, 4.0, 0.5};
  points[1] = {1.0, 1.0, 8.0, 0.125};
  std::ostringstream out;
  write_sweep_csv(out, points);
  CHECK(out.str() ==
        "f_hz,energy_target,energy_monitor,ratio\n"
        "0.5,2,4,0.5\n"
        "1,1,8,0.125\n");
}

TEST_CASE("trace csv labels states by vertex") {
  SimulationTrace trace;
  trace.time = {0.0, 0.5};
  trace.states = {{0.0, 0.0}, {0.25, 0.75}};
  trace.y_target = {0.0, 0.75};
  trace.y_monitor = {0.0, 0.25};
  std::ostringstream out;
  write_trace_csv(out, trace);
  CHECK(out.str() ==
        "t,x_1,x_2,y_target,y_monitor\n"
        "0,0,0,0,0\n"
        "0.5,0.25,0.75,0.75,0.25\n");
}
