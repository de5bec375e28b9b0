#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fanramsey/graph.hpp"

namespace fanramsey {

struct Matching {
  std::vector<Edge> edges;  // normalized, sorted

  int size() const { return static_cast<int>(edges.size()); }
};

/// True iff the edges are pairwise disjoint and all present in g.
bool is_matching(const Graph& g, const Matching& m);

/// mate[v] = partner of v, or -1.
std::vector<Vertex> mate_array(int n, const Matching& m);

/// Maximum matching via Edmonds' blossom algorithm. Deterministic: vertices
/// and neighbours are scanned in ascending id order.
Matching max_matching(const Graph& g);

/// Exhaustive maximum matching. Throws std::length_error above 24 vertices.
Matching brute_matching(const Graph& g);

inline constexpr int kBruteMatchingLimit = 24;

/// Every maximum matching of g. Throws std::length_error above 14 vertices.
std::vector<Matching> all_maximum_matchings(const Graph& g);

/// Gallai-Edmonds sets: D = vertices missed by some maximum matching, split
/// into the (odd) components of G[D]; A = N(D) \ D; C = the rest.
struct EGPartition {
  std::vector<Vertex> A;
  std::vector<Vertex> C;
  std::vector<std::vector<Vertex>> D;
  int deficiency = 0;
  int nu = 0;

  int p() const { return static_cast<int>(D.size()); }
};

EGPartition edmonds_gallai(const Graph& g);

/// Checks the partition and counting identities: A, C, D_i partition V(g);
/// each D_i is connected in g - A with odd size; every component of g - A
/// inside C is even; p = |A| + def; nu = |A| + (|C| + sum(|D_i| - 1)) / 2.
/// Returns a description of the first violated property, if any.
std::optional<std::string> check_eg_structure(const Graph& g, const EGPartition& eg);

/// Checks that a maximum matching m behaves as the decomposition predicts:
/// perfect on C, A matched into distinct D_i, near-perfect on each D_i.
std::optional<std::string> check_eg_against_matching(const Graph& g, const EGPartition& eg, const Matching& m);

struct VertexCover {
  std::vector<Vertex> vertices;
};

class MatchingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `left[v]` marks the designated left side. Requires every edge to cross the
/// bipartition and m to be a maximum matching (MatchingError otherwise).
/// The cover takes exactly one endpoint from each matching edge.
VertexCover konig_cover(const Graph& g, const std::vector<bool>& left, const Matching& m);

/// Lemma-style report on G_chi restricted to N_chi(v) (or the whole colour
/// graph when no vertex is given).
struct NeighborhoodStructure {
  bool applicable = false;
  std::string reason;  // why not applicable

  std::vector<Vertex> host;  // host vertices, in colouring ids
  EGPartition partition;     // in colouring ids
  int host_order = 0;
  int nu = 0;

  bool nu_identity = false;      // |A| + (|C| + sum(|D_i|-1))/2 = nu <= n-1
  bool odd_count_bound = false;  // p >= |A| + host_order - (2n - 2)
  bool cross_edges_other_color = false;  // D_i-D_j and D_i-C edges are colour 3-chi
};

NeighborhoodStructure eg_neighborhood_structure(const TwoColoring& k, std::optional<Vertex> v, Color chi, int n);

}  // namespace fanramsey
