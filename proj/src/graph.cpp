#include "fanramsey/graph.hpp"

#include <algorithm>
#include <numeric>

namespace fanramsey {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw GraphError("vertex id " + std::to_string(v) + " out of range for order " + std::to_string(n));
  }
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = g.adj_[static_cast<std::size_t>(v)];
    std::sort(nb.begin(), nb.end());
    if (auto it = std::adjacent_find(nb.begin(), nb.end()); it != nb.end()) {
      throw GraphError("duplicate edge " + std::to_string(std::min(v, *it)) + " " + std::to_string(std::max(v, *it)));
    }
  }
  g.num_edges_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order(); ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_valid() const {
  std::size_t endpoints = 0;
  for (Vertex u = 0; u < order(); ++u) {
    const auto& nb = neighbors(u);
    if (!std::is_sorted(nb.begin(), nb.end())) return false;
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
    for (Vertex v : nb) {
      if (v < 0 || v >= order() || v == u) return false;
      if (!has_edge(v, u)) return false;
    }
    endpoints += nb.size();
  }
  return endpoints == 2 * num_edges_;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

std::size_t GraphBuilder::index(Vertex u, Vertex v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  matrix_[index(u, v)] = 1;
  matrix_[index(v, u)] = 1;
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  matrix_[index(u, v)] = 0;
  matrix_[index(v, u)] = 0;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const { return matrix_[index(u, v)] != 0; }

Graph GraphBuilder::build() const {
  Graph g(n_);
  std::size_t endpoints = 0;
  for (Vertex u = 0; u < n_; ++u) {
    auto& nb = g.adj_[static_cast<std::size_t>(u)];
    const std::size_t row = static_cast<std::size_t>(u) * static_cast<std::size_t>(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (matrix_[row + static_cast<std::size_t>(v)]) nb.push_back(v);
    }
    endpoints += nb.size();
  }
  g.num_edges_ = endpoints / 2;
  return g;
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph complete_bipartite(int a, int b) { return build_complete_multipartite(MultipartiteSpec({a, b})); }

Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);          // outer cycle
    b.add_edge(i, i + 5);                // spokes
    b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return b.build();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    const auto& nb = g.neighbors(u);
    auto it = nb.begin();
    for (Vertex v = u + 1; v < n; ++v) {
      it = std::lower_bound(it, nb.end(), v);
      if (it == nb.end() || *it != v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> subset) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    check_vertex(g.order(), subset[i]);
    auto& slot = label[static_cast<std::size_t>(subset[i])];
    if (slot != -1) throw GraphError("vertex " + std::to_string(subset[i]) + " repeated in subset");
    slot = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (Vertex w : g.neighbors(subset[i])) {
      const int j = label[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return {Graph::from_edges(static_cast<int>(subset.size()), edges),
          std::vector<Vertex>(subset.begin(), subset.end())};
}

MultipartiteSpec::MultipartiteSpec(std::vector<int> part_sizes) : sizes_(std::move(part_sizes)) {
  if (sizes_.empty()) throw GraphError("multipartite spec needs at least one part");
  for (int s : sizes_) {
    if (s < 1) throw GraphError("multipartite part sizes must be positive");
  }
  std::sort(sizes_.begin(), sizes_.end());
}

int MultipartiteSpec::order() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

Graph build_complete_multipartite(const MultipartiteSpec& spec) {
  const int n = spec.order();
  std::vector<int> part(static_cast<std::size_t>(n));
  int next = 0;
  for (int p = 0; p < spec.parts(); ++p)
    for (int i = 0; i < spec.part_sizes()[static_cast<std::size_t>(p)]; ++i) part[static_cast<std::size_t>(next++)] = p;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

TwoColoring TwoColoring::all(int n, Color c) {
  return TwoColoring(c == Color::Red ? complete_graph(n) : Graph(n));
}

Color TwoColoring::color(Vertex u, Vertex v) const {
  if (u == v) throw GraphError("no edge colour on a loop");
  return red_.has_edge(u, v) ? Color::Red : Color::Blue;
}

TwoColoring TwoColoring::restrict_to(std::span<const Vertex> subset) const {
  return TwoColoring(induced(red_, subset).graph);
}

}  // namespace fanramsey
