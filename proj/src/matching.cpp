#include "fanramsey/matching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace fanramsey {

bool is_matching(const Graph& g, const Matching& m) {
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (auto [u, v] : m.edges) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) return false;
    if (!g.has_edge(u, v)) return false;
    if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) return false;
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<Vertex> mate_array(int n, const Matching& m) {
  std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
  for (auto [u, v] : m.edges) {
    mate[static_cast<std::size_t>(u)] = v;
    mate[static_cast<std::size_t>(v)] = u;
  }
  return mate;
}

namespace {

Matching from_mates(const std::vector<Vertex>& mate) {
  Matching m;
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v) {
    if (mate[static_cast<std::size_t>(v)] > v) m.edges.emplace_back(v, mate[static_cast<std::size_t>(v)]);
  }
  return m;
}

// Edmonds' blossom algorithm, BFS formulation with explicit blossom bases.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.order()),
        mate_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_)),
        base_(static_cast<std::size_t>(n_)),
        used_(static_cast<std::size_t>(n_)),
        in_blossom_(static_cast<std::size_t>(n_)),
        on_path_(static_cast<std::size_t>(n_)) {}

  std::vector<Vertex> run() {
    // Greedy start; augmenting paths finish the job.
    for (Vertex v = 0; v < n_; ++v) {
      if (mate(v) != -1) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (mate(w) == -1) {
          mate_[idx(v)] = w;
          mate_[idx(w)] = v;
          break;
        }
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (mate(v) != -1) continue;
      const Vertex end = find_path(v);
      if (end != -1) augment(end);
    }
    return mate_;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
  Vertex mate(Vertex v) const { return mate_[idx(v)]; }

  Vertex lca(Vertex a, Vertex b) {
    std::fill(on_path_.begin(), on_path_.end(), false);
    for (;;) {
      a = base_[idx(a)];
      on_path_[idx(a)] = true;
      if (mate(a) == -1) break;
      a = parent_[idx(mate(a))];
    }
    for (;;) {
      b = base_[idx(b)];
      if (on_path_[idx(b)]) return b;
      b = parent_[idx(mate(b))];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = in_blossom_[idx(base_[idx(mate(v))])] = true;
      parent_[idx(v)] = child;
      child = mate(v);
      v = parent_[idx(mate(v))];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[idx(root)] = true;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[idx(v)] == base_[idx(to)] || mate(v) == to) continue;
        if (to == root || (mate(to) != -1 && parent_[idx(mate(to))] != -1)) {
          const Vertex b = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = b;
              if (!used_[idx(i)]) {
                used_[idx(i)] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (mate(to) == -1) return to;
          used_[idx(mate(to))] = true;
          queue.push(mate(to));
        }
      }
    }
    return -1;
  }

  void augment(Vertex v) {
    while (v != -1) {
      const Vertex pv = parent_[idx(v)];
      const Vertex ppv = mate(pv);
      mate_[idx(v)] = pv;
      mate_[idx(pv)] = v;
      v = ppv;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
  std::vector<bool> on_path_;
};

Graph without_vertex(const Graph& g, Vertex removed) {
  std::vector<Edge> edges;
  for (auto e : g.edges()) {
    if (e.first != removed && e.second != removed) edges.push_back(e);
  }
  return Graph::from_edges(g.order(), edges);
}

}  // namespace

Matching max_matching(const Graph& g) { return from_mates(Blossom(g).run()); }

Matching brute_matching(const Graph& g) {
  const int n = g.order();
  if (n > kBruteMatchingLimit) {
    throw std::length_error("brute_matching: " + std::to_string(n) + " vertices exceeds the limit of " +
                            std::to_string(kBruteMatchingLimit));
  }
  std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  std::vector<Vertex> best = mate;
  int best_size = 0;
  int size = 0;

  // Branch on the lowest undecided vertex: leave it exposed or match it to a
  // later undecided neighbour. Prune when even a perfect finish cannot win.
  std::function<void(Vertex, int)> go = [&](Vertex from, int undecided) {
    if (size > best_size) {
      best_size = size;
      best = mate;
    }
    if (size + undecided / 2 <= best_size) return;
    Vertex v = from;
    while (v < n && done[static_cast<std::size_t>(v)]) ++v;
    if (v == n) return;
    done[static_cast<std::size_t>(v)] = true;
    for (Vertex w : g.neighbors(v)) {
      if (w < v || done[static_cast<std::size_t>(w)]) continue;
      done[static_cast<std::size_t>(w)] = true;
      mate[static_cast<std::size_t>(v)] = w;
      mate[static_cast<std::size_t>(w)] = v;
      ++size;
      go(v + 1, undecided - 2);
      --size;
      mate[static_cast<std::size_t>(v)] = mate[static_cast<std::size_t>(w)] = -1;
      done[static_cast<std::size_t>(w)] = false;
    }
    go(v + 1, undecided - 1);
    done[static_cast<std::size_t>(v)] = false;
  };
  go(0, n);
  return from_mates(best);
}

std::vector<Matching> all_maximum_matchings(const Graph& g) {
  const int n = g.order();
  if (n > 14) throw std::length_error("all_maximum_matchings: order " + std::to_string(n) + " exceeds 14");
  const int nu = brute_matching(g).size();
  const int allowed_exposed = n - 2 * nu;
  std::vector<Matching> out;
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  Matching current;
  std::function<void(Vertex, int)> go = [&](Vertex from, int exposed) {
    Vertex v = from;
    while (v < n && done[static_cast<std::size_t>(v)]) ++v;
    if (v == n) {
      if (current.size() == nu) {
        Matching m = current;
        std::sort(m.edges.begin(), m.edges.end());
        out.push_back(std::move(m));
      }
      return;
    }
    done[static_cast<std::size_t>(v)] = true;
    for (Vertex w : g.neighbors(v)) {
      if (w < v || done[static_cast<std::size_t>(w)]) continue;
      done[static_cast<std::size_t>(w)] = true;
      current.edges.emplace_back(v, w);
      go(v + 1, exposed);
      current.edges.pop_back();
      done[static_cast<std::size_t>(w)] = false;
    }
    if (exposed < allowed_exposed) go(v + 1, exposed + 1);
    done[static_cast<std::size_t>(v)] = false;
  };
  go(0, 0);
  return out;
}

EGPartition edmonds_gallai(const Graph& g) {
  const int n = g.order();
  EGPartition eg;
  eg.nu = max_matching(g).size();
  eg.deficiency = n - 2 * eg.nu;

  std::vector<bool> in_d(static_cast<std::size_t>(n), false);
  for (Vertex v = 0; v < n; ++v) {
    in_d[static_cast<std::size_t>(v)] = max_matching(without_vertex(g, v)).size() == eg.nu;
  }
  std::vector<bool> in_a(static_cast<std::size_t>(n), false);
  for (Vertex v = 0; v < n; ++v) {
    if (!in_d[static_cast<std::size_t>(v)]) continue;
    for (Vertex w : g.neighbors(v)) {
      if (!in_d[static_cast<std::size_t>(w)]) in_a[static_cast<std::size_t>(w)] = true;
    }
  }
  // Components of G[D], discovered from the lowest id.
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Vertex s = 0; s < n; ++s) {
    if (in_a[static_cast<std::size_t>(s)]) {
      eg.A.push_back(s);
    } else if (!in_d[static_cast<std::size_t>(s)]) {
      eg.C.push_back(s);
    } else if (!seen[static_cast<std::size_t>(s)]) {
      std::vector<Vertex> comp{s};
      seen[static_cast<std::size_t>(s)] = true;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (Vertex w : g.neighbors(comp[i])) {
          if (in_d[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            comp.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      eg.D.push_back(std::move(comp));
    }
  }
  return eg;
}

std::optional<std::string> check_eg_structure(const Graph& g, const EGPartition& eg) {
  const int n = g.order();
  // 0 = A, 1 = C, 2 + i = D_i
  std::vector<int> block(static_cast<std::size_t>(n), -1);
  auto assign = [&](Vertex v, int b) -> bool {
    if (v < 0 || v >= n || block[static_cast<std::size_t>(v)] != -1) return false;
    block[static_cast<std::size_t>(v)] = b;
    return true;
  };
  for (Vertex v : eg.A)
    if (!assign(v, 0)) return "A overlaps another block or is out of range";
  for (Vertex v : eg.C)
    if (!assign(v, 1)) return "C overlaps another block or is out of range";
  for (int i = 0; i < eg.p(); ++i) {
    if (eg.D[static_cast<std::size_t>(i)].empty()) return "empty odd component";
    for (Vertex v : eg.D[static_cast<std::size_t>(i)])
      if (!assign(v, 2 + i)) return "D_" + std::to_string(i) + " overlaps another block";
  }
  for (Vertex v = 0; v < n; ++v)
    if (block[static_cast<std::size_t>(v)] == -1) return "vertex " + std::to_string(v) + " not covered";

  // Components of g - A must be exactly the D_i plus even pieces of C.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int comps = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (block[static_cast<std::size_t>(s)] == 0 || comp[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = comps;
    int size = 0;
    int kind = block[static_cast<std::size_t>(s)];
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      if (block[static_cast<std::size_t>(v)] != kind) return "component of G - A mixes blocks";
      for (Vertex w : g.neighbors(v)) {
        if (block[static_cast<std::size_t>(w)] != 0 && comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = comps;
          stack.push_back(w);
        }
      }
    }
    if (kind == 1 && size % 2 != 0) return "odd component inside C";
    if (kind >= 2) {
      const auto& d = eg.D[static_cast<std::size_t>(kind - 2)];
      if (size != static_cast<int>(d.size())) return "D_" + std::to_string(kind - 2) + " is not connected in G - A";
      if (size % 2 == 0) return "D_" + std::to_string(kind - 2) + " has even size";
    }
    ++comps;
  }
  if (eg.deficiency != n - 2 * eg.nu) return "deficiency != |V| - 2 nu";
  if (eg.p() != static_cast<int>(eg.A.size()) + eg.deficiency) return "p != |A| + def";
  int excess = static_cast<int>(eg.C.size());
  for (const auto& d : eg.D) excess += static_cast<int>(d.size()) - 1;
  if (excess % 2 != 0 || eg.nu != static_cast<int>(eg.A.size()) + excess / 2) {
    return "nu != |A| + (|C| + sum(|D_i| - 1)) / 2";
  }
  return std::nullopt;
}

std::optional<std::string> check_eg_against_matching(const Graph& g, const EGPartition& eg, const Matching& m) {
  const int n = g.order();
  std::vector<int> block(static_cast<std::size_t>(n), -1);
  for (Vertex v : eg.A) block[static_cast<std::size_t>(v)] = 0;
  for (Vertex v : eg.C) block[static_cast<std::size_t>(v)] = 1;
  for (int i = 0; i < eg.p(); ++i)
    for (Vertex v : eg.D[static_cast<std::size_t>(i)]) block[static_cast<std::size_t>(v)] = 2 + i;
  const auto mate = mate_array(n, m);

  for (Vertex v : eg.C) {
    const Vertex w = mate[static_cast<std::size_t>(v)];
    if (w == -1 || block[static_cast<std::size_t>(w)] != 1) return "matching is not perfect on C";
  }
  std::vector<bool> hit(static_cast<std::size_t>(eg.p()), false);
  for (Vertex v : eg.A) {
    const Vertex w = mate[static_cast<std::size_t>(v)];
    if (w == -1 || block[static_cast<std::size_t>(w)] < 2) return "A vertex not matched into an odd component";
    const auto target = static_cast<std::size_t>(block[static_cast<std::size_t>(w)] - 2);
    if (hit[target]) return "two A vertices matched into the same odd component";
    hit[target] = true;
  }
  for (int i = 0; i < eg.p(); ++i) {
    int inside = 0;
    for (Vertex v : eg.D[static_cast<std::size_t>(i)]) {
      const Vertex w = mate[static_cast<std::size_t>(v)];
      if (w != -1 && block[static_cast<std::size_t>(w)] == 2 + i) ++inside;
    }
    if (inside != static_cast<int>(eg.D[static_cast<std::size_t>(i)].size()) - 1) {
      return "matching is not near-perfect on D_" + std::to_string(i);
    }
  }
  return std::nullopt;
}

VertexCover konig_cover(const Graph& g, const std::vector<bool>& left, const Matching& m) {
  const int n = g.order();
  if (static_cast<int>(left.size()) != n) throw MatchingError("side labels do not match graph order");
  for (auto [u, v] : g.edges()) {
    if (left[static_cast<std::size_t>(u)] == left[static_cast<std::size_t>(v)]) {
      throw MatchingError("edge " + std::to_string(u) + " " + std::to_string(v) + " does not cross the bipartition");
    }
  }
  if (!is_matching(g, m)) throw MatchingError("supplied edge set is not a matching of the graph");
  if (m.size() != max_matching(g).size()) throw MatchingError("supplied matching is not maximum");

  const auto mate = mate_array(n, m);
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  std::queue<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (left[static_cast<std::size_t>(v)] && mate[static_cast<std::size_t>(v)] == -1) {
      reached[static_cast<std::size_t>(v)] = true;
      queue.push(v);
    }
  }
  // Alternate: left -> right along non-matching edges, right -> left along M.
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    if (left[static_cast<std::size_t>(v)]) {
      for (Vertex w : g.neighbors(v)) {
        if (w != mate[static_cast<std::size_t>(v)] && !reached[static_cast<std::size_t>(w)]) {
          reached[static_cast<std::size_t>(w)] = true;
          queue.push(w);
        }
      }
    } else {
      const Vertex w = mate[static_cast<std::size_t>(v)];
      if (w != -1 && !reached[static_cast<std::size_t>(w)]) {
        reached[static_cast<std::size_t>(w)] = true;
        queue.push(w);
      }
    }
  }
  VertexCover cover;
  for (Vertex v = 0; v < n; ++v) {
    const bool l = left[static_cast<std::size_t>(v)];
    if (l != reached[static_cast<std::size_t>(v)]) cover.vertices.push_back(v);
  }
  return cover;
}

NeighborhoodStructure eg_neighborhood_structure(const TwoColoring& k, std::optional<Vertex> v, Color chi, int n) {
  NeighborhoodStructure out;
  if (n < 1) {
    out.reason = "n must be positive";
    return out;
  }
  if (v) {
    if (*v < 0 || *v >= k.order()) throw GraphError("vertex out of range");
    out.host = k.neighbors(*v, chi);
  } else {
    out.host.resize(static_cast<std::size_t>(k.order()));
    std::iota(out.host.begin(), out.host.end(), 0);
  }
  out.host_order = static_cast<int>(out.host.size());
  if (out.host_order < 2 * n || out.host_order >= 3 * n) {
    out.reason = "host order " + std::to_string(out.host_order) + " outside [2n, 3n)";
    return out;
  }
  const auto sub = induced(k.graph(chi), out.host);
  out.nu = max_matching(sub.graph).size();
  if (out.nu > n - 1) {
    out.reason = "colour-" + std::string(color_name(chi)) + " matching of size " + std::to_string(out.nu) +
                 " >= n in the host";
    return out;
  }
  out.applicable = true;
  const EGPartition local = edmonds_gallai(sub.graph);
  auto lift = [&](const std::vector<Vertex>& vs) {
    std::vector<Vertex> r;
    for (Vertex x : vs) r.push_back(sub.original[static_cast<std::size_t>(x)]);
    std::sort(r.begin(), r.end());
    return r;
  };
  out.partition.A = lift(local.A);
  out.partition.C = lift(local.C);
  for (const auto& d : local.D) out.partition.D.push_back(lift(d));
  out.partition.nu = local.nu;
  out.partition.deficiency = local.deficiency;

  int excess = static_cast<int>(local.C.size());
  for (const auto& d : local.D) excess += static_cast<int>(d.size()) - 1;
  const int a = static_cast<int>(local.A.size());
  out.nu_identity = excess % 2 == 0 && a + excess / 2 == out.nu && out.nu <= n - 1;
  out.odd_count_bound = local.p() >= a + out.host_order - (2 * n - 2);

  const Color off = other(chi);
  bool cross_ok = true;
  const auto& parts = out.partition.D;
  for (std::size_t i = 0; i < parts.size() && cross_ok; ++i) {
    for (Vertex x : parts[i]) {
      for (std::size_t j = i + 1; j < parts.size() && cross_ok; ++j)
        for (Vertex y : parts[j]) cross_ok = cross_ok && k.color(x, y) == off;
      for (Vertex y : out.partition.C) cross_ok = cross_ok && k.color(x, y) == off;
      if (!cross_ok) break;
    }
  }
  out.cross_edges_other_color = cross_ok;
  return out;
}

}  // namespace fanramsey
