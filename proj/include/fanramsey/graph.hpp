#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fanramsey {

using Vertex = int;

/// Undirected edge, always normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; use GraphBuilder or Graph::from_edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  /// Throws GraphError on out-of-range ids, loops and duplicate edges.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return num_edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  int min_degree() const;
  int max_degree() const;

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Checks symmetry, loop-freeness, sortedness and id range.
  bool is_valid() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// Mutable edge accumulator backed by an adjacency matrix. Adding an edge
/// twice is a no-op; loops throw.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  int order() const { return n_; }

  Graph build() const;

 private:
  std::size_t index(Vertex u, Vertex v) const;
  int n_;
  std::vector<std::uint8_t> matrix_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

Graph complement(const Graph& g);

/// Result of restricting a graph to a vertex subset. `original[i]` is the
/// host vertex that became vertex i of `graph`.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

/// Subset order is preserved (and duplicates rejected).
InducedSubgraph induced(const Graph& g, std::span<const Vertex> subset);

/// Part sizes V_1 <= ... <= V_t of a complete multipartite graph.
class MultipartiteSpec {
 public:
  /// Sorts ascending. Throws GraphError if empty or any size < 1.
  explicit MultipartiteSpec(std::vector<int> part_sizes);

  const std::vector<int>& part_sizes() const { return sizes_; }
  int parts() const { return static_cast<int>(sizes_.size()); }
  int order() const;
  int largest() const { return sizes_.back(); }
  int smallest() const { return sizes_.front(); }

 private:
  std::vector<int> sizes_;
};

/// Vertex blocks are laid out consecutively in (ascending) part order.
Graph build_complete_multipartite(const MultipartiteSpec& spec);

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

/// Red/blue colouring of the edges of K_n, stored as the red graph. Blue is
/// the complement and is derived on demand.
class TwoColoring {
 public:
  TwoColoring() = default;
  explicit TwoColoring(Graph red) : red_(std::move(red)), blue_(complement(red_)) {}

  static TwoColoring all(int n, Color c);

  int order() const { return red_.order(); }
  const Graph& red() const { return red_; }
  const Graph& blue() const { return blue_; }
  const Graph& graph(Color c) const { return c == Color::Red ? red_ : blue_; }

  Color color(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v, Color c) const { return graph(c).neighbors(v); }
  int degree(Vertex v, Color c) const { return graph(c).degree(v); }

  /// Colouring restricted to a vertex subset, relabelled as in induced().
  TwoColoring restrict_to(std::span<const Vertex> subset) const;

 private:
  Graph red_;
  // Cached complement; kept in sync because the colouring is immutable.
  Graph blue_;
};

}  // namespace fanramsey
