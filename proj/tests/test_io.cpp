#include <doctest.h>

#include "helpers.hpp"
#include "svx/graph_io.hpp"
#include "svx/harness.hpp"
#include "svx/spectra.hpp"

using namespace svx;
using namespace svx::testing;

TEST_CASE("serialize and parse round-trip exactly") {
  for (const Digraph& g :
       {fig5_graph(), fig6_half_graph(), cycle(5), cycle(4, 2, true), hypercube(3, 1),
        complete_bipartite(3), random_eulerian(6, 0.5, 3), random_undirected(5, 0.5, 4)}) {
    Digraph back = parse_graph(serialize_graph(g));
    CHECK(back == g);
  }
}

TEST_CASE("counterexample file layout") {
  std::string text = serialize_graph(fig5_graph());
  CHECK(text == "n 4 directed\n0\t3\t1\n1\t2\t1\n2\t0\t1\n2\t3\t1\n3\t1\t1\n3\t2\t1\n");
}

TEST_CASE("singleton header parses") {
  Digraph g = parse_graph("n 1 directed\n");
  CHECK(g.size() == 1);
  CHECK(g.edge_pair_count() == 0);
}

TEST_CASE("undirected files list edges once in either orientation") {
  Digraph g = parse_graph("n 3 undirected\n0 1 1\n2 1 0.5\n");
  CHECK(g.weight(1, 0) == Rat(1));
  CHECK(g.weight(1, 2) == Rat(1, 2));
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS_AS(parse_graph(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("m 2 directed\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("n 2 sideways\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("n 0 directed\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("n 2 directed\n0 1 -1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("n 2 directed\n0 1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("n 2 directed\n0 2 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("n 2 directed\n0 1 1\n0 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("n 2 undirected\n0 1 1\n1 0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("n 2 directed\n0 1 banana\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("n 2 directed\n0 1 1 7\n"), std::invalid_argument);
}

TEST_CASE("fifteen-digit decimal weights survive the round-trip") {
  Digraph g = parse_graph("n 2 directed\n0 1 0.123456789012345\n1 0 3.14159\n");
  Digraph back = parse_graph(serialize_graph(g));
  CHECK(back == g);
  CHECK(back.weight(0, 1) == Rat(123456789012345L, 1000000000000000L));
}

TEST_CASE("comments and blank lines are tolerated") {
  Digraph g = parse_graph("# generated\nn 2 directed\n\n0 1 1\n1 0 1\n");
  CHECK(g.edge_pair_count() == 2);
}

TEST_CASE("spectrum json shape") {
  Spectrum s = singular_values(cycle(3, 0, true));
  std::string j = spectrum_json(s).dump();
  CHECK(j.find("\"mus\":null") != std::string::npos);
  CHECK(j.find("\"sigmas\":[") != std::string::npos);
  CHECK(j.find("\"residual\":") != std::string::npos);

  Spectrum u = singular_values(cycle(4));
  CHECK(spectrum_json(u).dump().find("\"mus\":[") != std::string::npos);
}

TEST_CASE("json writer emits sorted keys and 17-digit floats") {
  Json j = Json::object();
  j["zeta"] = 1;
  j["alpha"] = 0.1;
  j["mid"] = true;
  CHECK(j.dump() == "{\"alpha\":0.10000000000000001,\"mid\":true,\"zeta\":1}");

  Json arr = Json::array();
  arr.push_back(nullptr);
  arr.push_back("a\"b");
  CHECK(arr.dump() == "[null,\"a\\\"b\"]");
}
