#pragma once

// Independent brute-force oracles and instance generators shared by the unit
// and acceptance suites. Nothing here calls the matching or fan code under test.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <random>
#include <vector>

#include "fanramsey/fans.hpp"
#include "fanramsey/graph.hpp"

namespace oracle {

using fanramsey::Graph;
using fanramsey::TwoColoring;
using fanramsey::Vertex;

/// Every labelled graph on n vertices (2^(n choose 2) of them).
void for_each_graph(int n, const std::function<void(const Graph&)>& visit);

Graph random_graph(std::mt19937_64& rng, int n, double p);

/// Matching number by exhaustive recursion on the lowest unmatched vertex.
int matching_number(const Graph& g);

/// F_k present, by trying every centre and every set of k disjoint triangles
/// through it. Does not use matchings.
bool has_fan(const Graph& g, int k);

/// Smallest vertex cover size, by subset enumeration.
int min_vertex_cover(const Graph& g);

/// Degree pairs (A side, B side) of every bipartite graph with sides of
/// sizes a and b, by enumerating all a*b-bit edge sets.
std::set<std::pair<std::vector<int>, std::vector<int>>> realizable_degree_pairs(int a, int b);

/// Fan-extension instance for the given case, drawn at random; the caller
/// checks the hypotheses with audit_extension.
struct ExtensionDraw {
  fanramsey::FanExtensionInstance instance;
  Vertex center = -1;
};
ExtensionDraw draw_extension_instance(std::mt19937_64& rng, fanramsey::ExtensionCase which, int max_n);

/// Uniform random colouring of K_{3n+1} conditioned (by rejection) on some
/// vertex having 3n neighbours in one colour.
TwoColoring conditioned_coloring(std::mt19937_64& rng, int n);

}  // namespace oracle
