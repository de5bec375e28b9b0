#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <random>

#include "fanramsey/graph_io.hpp"
#include "oracles.hpp"

using namespace fanramsey;

TEST_CASE("edge list parsing") {
  CHECK(parse_edge_list("0 1\n1 2\n") == path_graph(3));
  CHECK(parse_edge_list("# comment\n0 1   # trailing\n\n1 2\n") == path_graph(3));
  const Graph padded = parse_edge_list("# vertices: 5\n0 1\n");
  CHECK(padded.order() == 5);
  CHECK(padded.size() == 1);
  CHECK(parse_edge_list("").order() == 0);
}

TEST_CASE("edge list errors carry positions") {
  try {
    parse_edge_list("0 1\n2 2\n");
    FAIL("loop accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
    CHECK(std::string(e.what()).find("loop") != std::string::npos);
  }
  try {
    parse_edge_list("0 1\n1 2\n1 0\n");
    FAIL("duplicate accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
  try {
    parse_edge_list("0 1\n1 x\n");
    FAIL("bad token accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("# vertices: 2\n0 3\n"), ParseError);
}

TEST_CASE("graph6 reference strings") {
  const Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(format_graph6(star) == "D?{");
  CHECK(format_graph6(petersen_graph()) == "IheA@GUAo");
  CHECK(parse_graph6("IheA@GUAo") == petersen_graph());
  CHECK(format_graph6(path_graph(3)) == "Bg");
  CHECK(format_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);       // truncated body
  CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError);     // extra byte
  CHECK_THROWS_AS(parse_graph6("D? "), ParseError);      // byte out of range
  CHECK_THROWS_AS(parse_graph6("Bh"), ParseError);       // padding bit set
  try {
    parse_graph6_all("Bg\nD?{\nD?\n");
    FAIL("truncated record accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK(parse_graph6_all("Bg\nD?{\n").size() == 2);
}

TEST_CASE("graph6 long header") {
  std::mt19937_64 rng(70);
  const Graph g = oracle::random_graph(rng, 70, 0.1);
  const std::string s = format_graph6(g);
  CHECK(s.front() == '~');
  CHECK(parse_graph6(s) == g);
}

TEST_CASE("round trips on random graphs") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const int n = static_cast<int>(rng() % 40);
    const double p = (rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(rng, n, p);
    REQUIRE(parse_graph(format_graph(g, GraphFormat::Graph6), GraphFormat::Graph6) == g);
    REQUIRE(parse_graph(format_graph(g, GraphFormat::EdgeList), GraphFormat::EdgeList) == g);
  }
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "fanramsey_io_test";
  std::filesystem::create_directories(dir);
  const TwoColoring k(petersen_graph());
  for (auto fmt : {GraphFormat::EdgeList, GraphFormat::Graph6}) {
    const auto path = (dir / (fmt == GraphFormat::Graph6 ? "k.g6" : "k.txt")).string();
    write_coloring(path, k, fmt);
    CHECK(read_coloring(path, fmt).red() == k.red());
  }
  CHECK_THROWS_AS(read_graph((dir / "missing.txt").string(), GraphFormat::EdgeList), IoError);
  CHECK(parse_format("g6") == GraphFormat::Graph6);
  CHECK(parse_format("edgelist") == GraphFormat::EdgeList);
  CHECK_THROWS(parse_format("dot"));
  std::filesystem::remove_all(dir);
}
