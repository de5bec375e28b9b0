#include <catch_amalgamated.hpp>

#include <random>

#include "fanramsey/graph.hpp"
#include "oracles.hpp"

using namespace fanramsey;

TEST_CASE("complete multipartite builder") {
  CHECK(build_complete_multipartite(MultipartiteSpec({1, 1, 1})) == complete_graph(3));
  const Graph single = build_complete_multipartite(MultipartiteSpec({3}));
  CHECK(single.order() == 3);
  CHECK(single.size() == 0);
  const Graph three = build_complete_multipartite(MultipartiteSpec({2, 2, 2}));
  CHECK(three.size() == 12);
  CHECK(three.min_degree() == 4);
  CHECK(three.max_degree() == 4);
  CHECK_THROWS_AS(MultipartiteSpec({}), GraphError);
  CHECK_THROWS_AS(MultipartiteSpec({2, 0}), GraphError);
}

TEST_CASE("multipartite spec is sorted and blocks follow it") {
  MultipartiteSpec spec({4, 1, 2});
  CHECK(spec.part_sizes() == std::vector<int>{1, 2, 4});
  const Graph g = build_complete_multipartite(spec);
  CHECK_FALSE(g.has_edge(1, 2));  // second block {1,2}
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(3, 6));  // last block {3..6}
}

TEST_CASE("multipartite edge count identity") {
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 5; ++c) {
        const int n = a + b + c;
        const Graph g = build_complete_multipartite(MultipartiteSpec({a, b, c}));
        CHECK(static_cast<int>(g.size()) * 2 == n * n - a * a - b * b - c * c);
      }
}

TEST_CASE("complement examples") {
  CHECK(complement(complete_graph(3)).size() == 0);
  CHECK(complement(Graph(4)) == complete_graph(4));
  CHECK(complement(complement(path_graph(3))) == path_graph(3));
}

TEST_CASE("complement is an involution on all graphs up to 7 vertices") {
  for (int n = 0; n <= 7; ++n) {
    oracle::for_each_graph(n, [](const Graph& g) {
      const Graph c = complement(g);
      REQUIRE(c.is_valid());
      REQUIRE(c.size() + g.size() == static_cast<std::size_t>(g.order() * (g.order() - 1) / 2));
      REQUIRE(complement(c) == g);
    });
  }
}

TEST_CASE("complement is an involution on random larger graphs") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Graph g = oracle::random_graph(rng, 8 + t % 30, 0.4);
    REQUIRE(complement(complement(g)) == g);
  }
}

TEST_CASE("induced subgraphs") {
  const std::vector<Vertex> first3{0, 1, 2};
  CHECK(induced(complete_graph(4), first3).graph == complete_graph(3));
  const auto p = induced(cycle_graph(5), first3);
  CHECK(p.graph == path_graph(3));
  CHECK(p.original == first3);
  const auto empty = induced(petersen_graph(), std::vector<Vertex>{});
  CHECK(empty.graph.order() == 0);
  CHECK_THROWS_AS(induced(complete_graph(3), std::vector<Vertex>{0, 5}), GraphError);
  CHECK_THROWS_AS(induced(complete_graph(3), std::vector<Vertex>{1, 1}), GraphError);
  const auto relabelled = induced(path_graph(4), std::vector<Vertex>{3, 2});
  CHECK(relabelled.graph.has_edge(0, 1));
  CHECK(relabelled.original == std::vector<Vertex>{3, 2});
}

TEST_CASE("from_edges rejects bad input") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> range{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, dup), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, range), GraphError);
}

TEST_CASE("generated graphs satisfy the structural validator") {
  CHECK(petersen_graph().is_valid());
  CHECK(petersen_graph().size() == 15);
  CHECK(complete_bipartite(3, 4).size() == 12);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) REQUIRE(oracle::random_graph(rng, 1 + t % 20, 0.3).is_valid());
}

TEST_CASE("two-colourings") {
  const TwoColoring all_red = TwoColoring::all(5, Color::Red);
  CHECK(all_red.blue().size() == 0);
  CHECK(all_red.degree(0, Color::Red) == 4);
  const TwoColoring k(path_graph(4));
  CHECK(k.color(0, 1) == Color::Red);
  CHECK(k.color(0, 2) == Color::Blue);
  CHECK(k.blue().size() == 3);
  const TwoColoring r = k.restrict_to(std::vector<Vertex>{0, 2, 3});
  CHECK(r.order() == 3);
  CHECK(r.color(1, 2) == Color::Red);
  CHECK(r.color(0, 1) == Color::Blue);
}
