#include "fanramsey/fans.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace fanramsey {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::string fmt_num(double x) {
  std::string s = std::to_string(x);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::optional<std::string> validate_fan(const Graph& g, const FanWitness& w, int k) {
  if (w.size() != k) return "fan has " + std::to_string(w.size()) + " spokes, expected " + std::to_string(k);
  if (w.center < 0 || w.center >= g.order()) return std::string("centre out of range");
  std::set<Vertex> used{w.center};
  for (auto [a, b] : w.spokes) {
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order()) return std::string("spoke vertex out of range");
    if (!used.insert(a).second || !used.insert(b).second) return "vertex repeated in fan at spoke " + std::to_string(a) + "-" + std::to_string(b);
    if (!g.has_edge(a, b)) return "spoke " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge";
    if (!g.has_edge(w.center, a) || !g.has_edge(w.center, b)) {
      return "centre " + std::to_string(w.center) + " not adjacent to spoke " + std::to_string(a) + "-" + std::to_string(b);
    }
  }
  return std::nullopt;
}

int fan_size_at(const Graph& g, Vertex v) {
  return max_matching(induced(g, g.neighbors(v)).graph).size();
}

std::optional<FanWitness> find_fan(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("fan size must be positive");
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  for (Vertex v : order) {
    if (g.degree(v) < 2 * k) break;
    const auto sub = induced(g, g.neighbors(v));
    const Matching m = max_matching(sub.graph);
    if (m.size() < k) continue;
    FanWitness w{v, {}};
    for (int i = 0; i < k; ++i) {
      const auto [a, b] = m.edges[static_cast<std::size_t>(i)];
      w.spokes.push_back(make_edge(sub.original[idx(a)], sub.original[idx(b)]));
    }
    if (auto problem = validate_fan(g, w, k)) throw std::logic_error("find_fan produced a bad witness: " + *problem);
    return w;
  }
  return std::nullopt;
}

std::optional<MonoFan> find_mono_fan(const TwoColoring& k, int n) {
  for (Color c : {Color::Red, Color::Blue}) {
    if (auto w = find_fan(k.graph(c), n)) return MonoFan{c, std::move(*w)};
  }
  return std::nullopt;
}

StarReport max_blue_star(const TwoColoring& k) {
  StarReport best;
  for (Vertex v = 0; v < k.order(); ++v) {
    const int d = k.degree(v, Color::Blue);
    if (best.vertex == -1 || d > best.degree) best = {v, d};
  }
  return best;
}

int multipartite_matching_bound(const MultipartiteSpec& spec) {
  if (spec.parts() < 2) throw std::invalid_argument("multipartite matching bound needs at least two parts");
  const int n = spec.order();
  if (spec.parts() == 2) return 2 * spec.smallest();
  if (2 * spec.largest() <= n) return 2 * (n / 2);
  return 2 * (n - spec.largest());
}

std::vector<Edge> multipartite_matching(std::vector<std::vector<Vertex>> parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end(), std::greater<>());  // pop lowest ids first
  std::vector<Edge> out;
  for (;;) {
    // Two largest non-empty parts, lowest index on ties.
    int first = -1;
    int second = -1;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
      const auto s = parts[idx(i)].size();
      if (s == 0) continue;
      if (first == -1 || s > parts[idx(first)].size()) {
        second = first;
        first = i;
      } else if (second == -1 || s > parts[idx(second)].size()) {
        second = i;
      }
    }
    if (second == -1) break;
    const Vertex u = parts[idx(first)].back();
    const Vertex w = parts[idx(second)].back();
    parts[idx(first)].pop_back();
    parts[idx(second)].pop_back();
    out.push_back(make_edge(u, w));
  }
  return out;
}

bool cycle_oracle(const Graph& g, int length) {
  const int n = g.order();
  if (n > kCycleOracleLimit) {
    throw std::length_error("cycle_oracle: order " + std::to_string(n) + " exceeds " +
                            std::to_string(kCycleOracleLimit));
  }
  if (length < 3 || length > n) return false;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  // The cycle's smallest vertex is the start; the rest are larger.
  std::function<bool(Vertex, Vertex, int)> extend = [&](Vertex start, Vertex v, int depth) -> bool {
    if (depth == length) return g.has_edge(v, start);
    for (Vertex w : g.neighbors(v)) {
      if (w <= start || on_path[idx(w)]) continue;
      on_path[idx(w)] = true;
      const bool found = extend(start, w, depth + 1);
      on_path[idx(w)] = false;
      if (found) return true;
    }
    return false;
  };
  for (Vertex s = 0; s + length <= n; ++s) {
    on_path[idx(s)] = true;
    const bool found = extend(s, s, 1);
    on_path[idx(s)] = false;
    if (found) return true;
  }
  return false;
}

const char* to_string(ExtensionCase c) {
  switch (c) {
    case ExtensionCase::I:
      return "i";
    case ExtensionCase::II:
      return "ii";
    case ExtensionCase::III:
      return "iii";
  }
  return "?";
}

int FanExtensionInstance::x_total() const {
  int total = 0;
  for (const auto& part : x_parts) total += static_cast<int>(part.size());
  return total;
}

PreconditionError::PreconditionError(std::vector<std::string> failures)
    : std::invalid_argument([&] {
        std::string msg = "fan extension preconditions failed:";
        for (const auto& f : failures) msg += "\n  - " + f;
        return msg;
      }()),
      failures_(std::move(failures)) {}

namespace {

// Block labels: 0..p-1 for X_i, p for Y, p+1 for Z, -1 unassigned.
struct Blocks {
  std::vector<int> of;
  int p = 0;

  int y() const { return p; }
  int z() const { return p + 1; }
  bool in_x(Vertex v) const { return of[idx(v)] >= 0 && of[idx(v)] < p; }
  bool in_y(Vertex v) const { return of[idx(v)] == p; }
  bool in_z(Vertex v) const { return of[idx(v)] == p + 1; }
};

Blocks label_blocks(const FanExtensionInstance& inst, std::vector<std::string>* problems) {
  Blocks b;
  b.p = static_cast<int>(inst.x_parts.size());
  b.of.assign(static_cast<std::size_t>(inst.graph.order()), -1);
  auto put = [&](Vertex v, int label) {
    if (v < 0 || v >= inst.graph.order()) {
      if (problems) problems->push_back("block vertex " + std::to_string(v) + " out of range");
      return;
    }
    if (b.of[idx(v)] != -1) {
      if (problems) problems->push_back("vertex " + std::to_string(v) + " appears in two blocks");
      return;
    }
    b.of[idx(v)] = label;
  };
  for (int i = 0; i < b.p; ++i)
    for (Vertex v : inst.x_parts[idx(i)]) put(v, i);
  for (Vertex v : inst.y) put(v, b.y());
  for (Vertex v : inst.z) put(v, b.z());
  return b;
}

// Chosen spokes plus a matching of the complete multipartite graph left on
// (X \ X_own) u Y after deleting `removed`.
FanWitness complete_fan(const FanExtensionInstance& inst, const Blocks& b, int own, Vertex v,
                        const std::vector<Edge>& chosen, const std::vector<bool>& removed) {
  std::vector<std::vector<Vertex>> residual;
  for (int i = 0; i < b.p; ++i) {
    if (i == own) continue;
    std::vector<Vertex> part;
    for (Vertex u : inst.x_parts[idx(i)])
      if (!removed[idx(u)]) part.push_back(u);
    residual.push_back(std::move(part));
  }
  std::vector<Vertex> y_rest;
  for (Vertex u : inst.y)
    if (!removed[idx(u)]) y_rest.push_back(u);
  residual.push_back(std::move(y_rest));

  FanWitness w{v, chosen};
  for (auto e : multipartite_matching(std::move(residual))) {
    if (w.size() >= inst.n) break;
    w.spokes.push_back(e);
  }
  if (w.size() > inst.n) w.spokes.resize(static_cast<std::size_t>(inst.n));
  return w;
}

FanWitness check_witness(const FanExtensionInstance& inst, FanWitness w, int n) {
  if (auto problem = validate_fan(inst.graph, w, n)) {
    throw std::logic_error("fan extension produced an invalid witness: " + *problem);
  }
  return w;
}

}  // namespace

std::vector<std::string> audit_instance(const FanExtensionInstance& inst) {
  std::vector<std::string> problems;
  if (inst.n < 1) problems.push_back("n must be positive");
  if (inst.lambda < 1.0) problems.push_back("lambda = " + fmt_num(inst.lambda) + " < 1");
  const Blocks b = label_blocks(inst, &problems);
  for (Vertex v = 0; v < inst.graph.order(); ++v) {
    if (b.of[idx(v)] == -1) problems.push_back("vertex " + std::to_string(v) + " is in no block");
  }
  for (std::size_t i = 0; i < inst.x_parts.size(); ++i) {
    const auto s = static_cast<double>(inst.x_parts[i].size());
    if (inst.x_parts[i].empty()) problems.push_back("X_" + std::to_string(i + 1) + " is empty");
    if (s > inst.lambda) {
      problems.push_back("|X_" + std::to_string(i + 1) + "| = " + fmt_num(s) + " > lambda = " + fmt_num(inst.lambda));
    }
  }
  if (!problems.empty()) return problems;

  std::vector<Vertex> xy;
  for (Vertex v = 0; v < inst.graph.order(); ++v)
    if (!b.in_z(v)) xy.push_back(v);
  for (std::size_t i = 0; i < xy.size(); ++i) {
    for (std::size_t j = i + 1; j < xy.size(); ++j) {
      const bool same = b.of[idx(xy[i])] == b.of[idx(xy[j])];
      if (same == inst.graph.has_edge(xy[i], xy[j])) {
        problems.push_back("X u Y is not complete multipartite at pair " + std::to_string(xy[i]) + "," +
                           std::to_string(xy[j]));
        return problems;
      }
    }
  }
  const int xy_total = inst.x_total() + static_cast<int>(inst.y.size());
  if (xy_total <= inst.n) {
    problems.push_back("|X| + |Y| = " + std::to_string(xy_total) + " <= n = " + std::to_string(inst.n));
  }
  return problems;
}

std::vector<std::string> audit_extension(const FanExtensionInstance& inst, ExtensionCase which, Vertex v,
                                         const Matching& m) {
  auto problems = audit_instance(inst);
  if (!problems.empty()) return problems;
  const Blocks b = label_blocks(inst, nullptr);
  const Graph& g = inst.graph;
  if (v < 0 || v >= g.order() || !b.in_x(v)) {
    problems.push_back("centre " + std::to_string(v) + " is not in X");
    return problems;
  }
  if (!is_matching(g, m)) {
    problems.push_back("supplied edge set is not a matching of the host graph");
    return problems;
  }
  const int x = inst.x_total();
  const int y = static_cast<int>(inst.y.size());
  const int q = inst.q();
  const double lambda = inst.lambda;
  auto z_near_v = [&](Vertex u) { return b.in_z(u) && g.has_edge(v, u); };

  int z_covered = 0;
  for (auto [s, t] : m.edges) {
    const bool sz = z_near_v(s);
    const bool tz = z_near_v(t);
    bool ok = false;
    if (sz && tz) {
      ok = true;
    } else if (sz || tz) {
      const Vertex other_end = sz ? t : s;
      ok = which == ExtensionCase::I ? !b.in_z(other_end) : b.in_y(other_end);
    }
    if (!ok) {
      problems.push_back("matching edge " + std::to_string(s) + "-" + std::to_string(t) +
                         " is not in the case's allowed edge set");
    }
    z_covered += (sz ? 1 : 0) + (tz ? 1 : 0);
  }
  const int covered = 2 * m.size();  // cases II/III: every endpoint lies in Y u Z
  switch (which) {
    case ExtensionCase::I:
      if (!(x > inst.n + lambda)) {
        problems.push_back("case i needs |X| = " + std::to_string(x) + " > n + lambda = " + fmt_num(inst.n + lambda));
      }
      if (!(z_covered > q + 2 * lambda)) {
        problems.push_back("case i needs the matching to cover more than q + 2 lambda = " + fmt_num(q + 2 * lambda) +
                           " vertices of Z, it covers " + std::to_string(z_covered));
      }
      break;
    case ExtensionCase::II:
      if (y > inst.n) {
        problems.push_back("case ii needs |Y| = " + std::to_string(y) + " <= n = " + std::to_string(inst.n));
      }
      if (!(covered > 2 * (q + lambda))) {
        problems.push_back("case ii needs the matching to cover more than 2(q + lambda) = " +
                           fmt_num(2 * (q + lambda)) + " vertices of Y u Z, it covers " + std::to_string(covered));
      }
      break;
    case ExtensionCase::III:
      if (y < inst.n) {
        problems.push_back("case iii needs |Y| = " + std::to_string(y) + " >= n = " + std::to_string(inst.n));
      }
      if (!(covered >= 2 * (inst.n - x + lambda))) {
        problems.push_back("case iii needs the matching to cover at least 2(n - |X| + lambda) = " +
                           fmt_num(2 * (inst.n - x + lambda)) + " vertices of Y u Z, it covers " +
                           std::to_string(covered));
      }
      break;
  }
  return problems;
}

FanExtension fan_extend_detailed(const FanExtensionInstance& inst, ExtensionCase which, Vertex v, const Matching& m) {
  if (auto problems = audit_extension(inst, which, v, m); !problems.empty()) throw PreconditionError(problems);
  const Blocks b = label_blocks(inst, nullptr);
  const int own = b.of[idx(v)];
  const int own_size = static_cast<int>(inst.x_parts[idx(own)].size());
  const int x = inst.x_total();
  const int q = inst.q();
  const int n = inst.n;

  std::vector<Edge> chosen;    // trimmed part of m
  std::vector<bool> removed(static_cast<std::size_t>(inst.graph.order()), false);  // U or U'
  std::vector<Edge> sorted = m.edges;
  std::sort(sorted.begin(), sorted.end());

  switch (which) {
    case ExtensionCase::I: {
      if (q < 0) break;  // |X| + |Y| > 2n: try the multipartite part alone
      const int target = q + own_size + 1;
      // Drop edges into v's own part, then take Z-Z edges before Z-(X u Y)
      // edges until target vertices of Z are covered; X u Y use stays <= target.
      std::vector<Edge> inner;
      std::vector<Edge> cross;
      for (auto e : sorted) {
        const bool sz = b.in_z(e.first);
        const bool tz = b.in_z(e.second);
        if (sz && tz) {
          inner.push_back(e);
        } else if (b.of[idx(sz ? e.second : e.first)] != own) {
          cross.push_back(e);
        }
      }
      int z_count = 0;
      for (const auto* list : {&inner, &cross}) {
        for (auto e : *list) {
          if (z_count >= target) break;
          chosen.push_back(e);
          z_count += list == &inner ? 2 : 1;
          if (list == &cross) removed[idx(b.in_z(e.first) ? e.second : e.first)] = true;
        }
      }
      if (z_count < target) throw std::logic_error("fan extension (i): trimmed matching covers too little of Z");
      break;
    }
    case ExtensionCase::II: {
      const int k = std::max(0, q + own_size + 1);
      chosen.assign(sorted.begin(), sorted.begin() + std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(sorted.size())));
      int marked = 0;
      for (auto [s, t] : chosen) {
        for (Vertex u : {s, t}) {
          if (b.in_y(u)) {
            removed[idx(u)] = true;
            ++marked;
          }
        }
      }
      // Grow U to U' of size k inside Y (or all of Y when |Y| < k).
      for (Vertex u : inst.y) {
        if (marked >= k) break;
        if (!removed[idx(u)]) {
          removed[idx(u)] = true;
          ++marked;
        }
      }
      break;
    }
    case ExtensionCase::III: {
      const int k = std::max(0, n - x + own_size);
      chosen.assign(sorted.begin(), sorted.begin() + std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(sorted.size())));
      for (auto [s, t] : chosen)
        for (Vertex u : {s, t})
          if (b.in_y(u)) removed[idx(u)] = true;
      break;
    }
  }

  FanWitness w = complete_fan(inst, b, own, v, chosen, removed);
  if (w.size() >= n) return {check_witness(inst, std::move(w), n), true};

  // The prescribed trim came up short. Use longer prefixes of m instead,
  // Z-Z edges first, edges into v's own part skipped.
  std::vector<Edge> usable;
  for (int pass = 0; pass < 2; ++pass) {
    for (auto e : sorted) {
      const bool inner = b.in_z(e.first) && b.in_z(e.second);
      if (inner != (pass == 0)) continue;
      if (!inner && b.of[idx(b.in_z(e.first) ? e.second : e.first)] == own) continue;
      usable.push_back(e);
    }
  }
  for (std::size_t j = 0; j <= usable.size(); ++j) {
    std::vector<Edge> prefix(usable.begin(), usable.begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<bool> used(static_cast<std::size_t>(inst.graph.order()), false);
    for (auto [s, t] : prefix)
      for (Vertex u : {s, t})
        if (!b.in_z(u)) used[idx(u)] = true;
    FanWitness alt = complete_fan(inst, b, own, v, prefix, used);
    if (alt.size() >= n) return {check_witness(inst, std::move(alt), n), false};
  }
  throw std::logic_error("fan extension (" + std::string(to_string(which)) + ") assembled only " +
                         std::to_string(w.size()) + " of " + std::to_string(n) + " spokes");
}

FanWitness fan_extend(const FanExtensionInstance& inst, ExtensionCase which, Vertex v, const Matching& m) {
  return fan_extend_detailed(inst, which, v, m).witness;
}

Matching find_extension_matching(const FanExtensionInstance& inst, ExtensionCase which, Vertex v) {
  if (auto problems = audit_instance(inst); !problems.empty()) throw PreconditionError(problems);
  const Blocks b = label_blocks(inst, nullptr);
  const Graph& g = inst.graph;
  if (v < 0 || v >= g.order() || !b.in_x(v)) throw PreconditionError({"centre " + std::to_string(v) + " is not in X"});
  std::vector<Edge> edges;
  for (auto [s, t] : g.edges()) {
    const bool sz = b.in_z(s) && g.has_edge(v, s);
    const bool tz = b.in_z(t) && g.has_edge(v, t);
    if (sz && tz) {
      edges.emplace_back(s, t);
    } else if (sz || tz) {
      const Vertex other_end = sz ? t : s;
      const bool ok = which == ExtensionCase::I ? !b.in_z(other_end) : b.in_y(other_end);
      if (ok) edges.emplace_back(s, t);
    }
  }
  return max_matching(Graph::from_edges(g.order(), edges));
}

HighDegreeFan high_degree_fan(const TwoColoring& k, int n) {
  if (n < 1) throw std::invalid_argument("fan size must be positive");
  HighDegreeFan out;
  for (Vertex v = 0; v < k.order(); ++v) {
    for (Color c : {Color::Red, Color::Blue}) {
      const auto& nb = k.neighbors(v, c);
      if (static_cast<int>(nb.size()) < 3 * n) continue;
      if (!out.applicable) {
        out.applicable = true;
        out.trigger_vertex = v;
        out.trigger_color = c;
      }
      // Either N_c(v) holds an n-matching in colour c (fan centred at v),
      // or the colouring restricted to N_c(v) has a monochromatic F_n.
      const auto sub = induced(k.graph(c), nb);
      const Matching m = max_matching(sub.graph);
      if (m.size() >= n) {
        FanWitness w{v, {}};
        for (int i = 0; i < n; ++i) {
          const auto [a, b2] = m.edges[idx(i)];
          w.spokes.push_back(make_edge(sub.original[idx(a)], sub.original[idx(b2)]));
        }
        out.fan = MonoFan{c, std::move(w)};
        return out;
      }
      if (auto inner = find_mono_fan(k.restrict_to(nb), n)) {
        FanWitness w{nb[idx(inner->witness.center)], {}};
        for (auto [a, b2] : inner->witness.spokes) w.spokes.push_back(make_edge(nb[idx(a)], nb[idx(b2)]));
        out.fan = MonoFan{inner->color, std::move(w)};
        return out;
      }
    }
  }
  if (out.applicable) out.fan = find_mono_fan(k, n);
  return out;
}

}  // namespace fanramsey
