#include "fanramsey/ramsey.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <thread>

#include "fanramsey/fans.hpp"

namespace fanramsey {

bool WitnessReport::all_hold() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds; });
}

namespace {

nlohmann::json fan_json(const FanWitness& w) {
  nlohmann::json spokes = nlohmann::json::array();
  for (auto [a, b] : w.spokes) spokes.push_back({a, b});
  return {{"center", w.center}, {"spokes", spokes}};
}

Claim fan_absence_claim(const TwoColoring& k, Color c, int n) {
  Claim claim{"no " + std::string(color_name(c)) + " F_" + std::to_string(n), true, nullptr};
  if (auto w = find_fan(k.graph(c), n)) {
    claim.holds = false;
    claim.certificate = fan_json(*w);
  }
  return claim;
}

}  // namespace

WitnessReport verify_star_fan_witness(const TwoColoring& k, int m, int n) {
  WitnessReport r;
  r.N = k.order();
  const StarReport star = max_blue_star(k);
  Claim no_star{"no blue K_{1," + std::to_string(m) + "}", star.vertex == -1 || star.degree <= m - 1, nullptr};
  if (!no_star.holds) no_star.certificate = {{"vertex", star.vertex}, {"blue_degree", star.degree}};
  r.claims.push_back(no_star);

  Claim min_degree{"red min degree >= N-m", true, nullptr};
  for (Vertex v = 0; v < r.N; ++v) {
    if (k.degree(v, Color::Red) < r.N - m) {
      min_degree.holds = false;
      min_degree.certificate = {{"vertex", v}, {"red_degree", k.degree(v, Color::Red)}, {"required", r.N - m}};
      break;
    }
  }
  r.claims.push_back(min_degree);
  r.claims.push_back(fan_absence_claim(k, Color::Red, n));
  if (r.all_hold()) {
    r.bound_value = r.N + 1;
    r.bound_implied = "R(K_{1," + std::to_string(m) + "}, F_" + std::to_string(n) + ") >= " + std::to_string(r.N + 1);
  }
  return r;
}

WitnessReport verify_fan_fan_witness(const TwoColoring& k, int n) {
  WitnessReport r;
  r.N = k.order();
  r.claims.push_back(fan_absence_claim(k, Color::Red, n));
  r.claims.push_back(fan_absence_claim(k, Color::Blue, n));
  if (r.all_hold()) {
    r.bound_value = r.N + 1;
    r.bound_implied = "R(F_" + std::to_string(n) + ") >= " + std::to_string(r.N + 1);
  }
  return r;
}

nlohmann::json to_json(const WitnessReport& r) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims) {
    nlohmann::json j{{"property", c.property}, {"holds", c.holds}};
    if (!c.holds) j["certificate"] = c.certificate;
    claims.push_back(j);
  }
  nlohmann::json out{{"N", r.N}, {"claims", claims}, {"all_hold", r.all_hold()}};
  out["bound_implied"] = r.bound_implied ? nlohmann::json(*r.bound_implied) : nlohmann::json(nullptr);
  out["bound_value"] = r.bound_value ? nlohmann::json(*r.bound_value) : nlohmann::json(nullptr);
  return out;
}

const char* to_string(FormulaRegime r) {
  switch (r) {
    case FormulaRegime::SmallStar:
      return "m<=n";
    case FormulaRegime::Middle:
      return "n<m<n(n-1)";
    case FormulaRegime::LargeStar:
      return "m>=n(n-1)";
  }
  return "?";
}

FormulaResult star_fan_formula(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("star_fan_formula needs m, n >= 1");
  FormulaResult f;
  if (m <= n) {
    f.regime = FormulaRegime::SmallStar;
    f.lower = f.upper = m + 2 * n - (m % 2 == 0 ? 1 : 0);
    f.exact = true;
  } else if (static_cast<long long>(m) < static_cast<long long>(n) * (n - 1)) {
    f.regime = FormulaRegime::Middle;
    const double core = (3.0 * m + std::sqrt(static_cast<double>(m) * m + 8.0 * n * n)) / 2.0;
    f.lower = core - 8.0;
    f.upper = core + 1.0;
  } else {
    f.regime = FormulaRegime::LargeStar;
    f.lower = f.upper = 2.0 * m + 1.0;
    f.exact = true;
  }
  return f;
}

FanRamseyBounds fan_ramsey_bounds(int n, double epsilon) {
  if (n < 1) throw std::invalid_argument("fan_ramsey_bounds needs n >= 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  FanRamseyBounds b;
  b.epsilon = epsilon;
  b.lower = (3.0 + std::sqrt(3.0)) * n - 8.0;
  b.upper = (5.0 + epsilon) * n;
  b.gate = 384.0 / (epsilon * epsilon);
  b.upper_valid = n >= b.gate;
  return b;
}

std::string Target::name() const {
  return kind == Kind::Star ? "K_{1," + std::to_string(size) + "}" : "F_" + std::to_string(size);
}

namespace {

constexpr int kMaxSearchOrder = 16;
using Mask = std::uint32_t;

bool has_matching(const std::array<Mask, kMaxSearchOrder>& adj, Mask mask, int need) {
  if (need <= 0) return true;
  if (std::popcount(mask) < 2 * need) return false;
  const int v = std::countr_zero(mask);
  const Mask rest = mask & ~(Mask{1} << v);
  for (Mask cand = adj[static_cast<std::size_t>(v)] & rest; cand; cand &= cand - 1) {
    const int w = std::countr_zero(cand);
    if (has_matching(adj, rest & ~(Mask{1} << w), need - 1)) return true;
  }
  return has_matching(adj, rest, need);
}

// Vertex-by-vertex edge colouring: edges (i, j), j < i, are coloured when
// vertex i is added. Vertex 0's edges are red-first (relabelling symmetry),
// and with identical targets red is the majority colour at vertex 0.
class Search {
 public:
  Search(Target blue_target, Target red_target, int n)
      : targets_{red_target, blue_target}, n_(n), symmetric_(blue_target == red_target) {
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) edges_.emplace_back(i, j);
    colors_.assign(edges_.size(), 0);
    adj_[0].fill(0);
    adj_[1].fill(0);
  }

  std::size_t edge_count() const { return edges_.size(); }

  // Colour of edge index e allowed by the symmetry rules?
  bool allowed(std::size_t e, int c) const {
    const auto [i, j] = edges_[e];
    if (j != 0) return true;
    // c: 0 red, 1 blue. Edges (1,0), (2,0), ... arrive in order.
    if (c == 0 && i > 1 && colors_[index_of(i - 1, 0)] == 1) return false;
    if (symmetric_ && c == 1 && 2 * (i - 1) < n_ - 1) return false;
    return true;
  }

  // Colour edge e with c; returns false if that completes a forbidden target.
  bool push(std::size_t e, int c) {
    const auto [i, j] = edges_[e];
    colors_[e] = c;
    adj_[c][static_cast<std::size_t>(i)] |= Mask{1} << j;
    adj_[c][static_cast<std::size_t>(j)] |= Mask{1} << i;
    return !violates(c, i, j);
  }

  void pop(std::size_t e) {
    const auto [i, j] = edges_[e];
    const int c = colors_[e];
    adj_[c][static_cast<std::size_t>(i)] &= ~(Mask{1} << j);
    adj_[c][static_cast<std::size_t>(j)] &= ~(Mask{1} << i);
  }

  bool extend(std::size_t e, long long& nodes) {
    ++nodes;
    if (e == edges_.size()) return true;
    for (int c = 0; c < 2; ++c) {
      if (!allowed(e, c)) continue;
      const bool ok = push(e, c);
      if (ok && extend(e + 1, nodes)) return true;
      pop(e);
    }
    return false;
  }

  TwoColoring coloring() const {
    std::vector<Edge> red;
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (colors_[e] == 0) red.push_back(make_edge(edges_[e].first, edges_[e].second));
    return TwoColoring(Graph::from_edges(n_, red));
  }

  const std::vector<int>& colors() const { return colors_; }

 private:
  std::size_t index_of(int i, int j) const { return static_cast<std::size_t>(i * (i - 1) / 2 + j); }

  bool violates(int c, int i, int j) const {
    const Target& t = targets_[c];
    const auto& adj = adj_[c];
    if (t.kind == Target::Kind::Star) {
      return std::popcount(adj[static_cast<std::size_t>(i)]) >= t.size ||
             std::popcount(adj[static_cast<std::size_t>(j)]) >= t.size;
    }
    // A new fan must use edge ij: centred at i or j, or ij is a spoke.
    Mask centres = (Mask{1} << i) | (Mask{1} << j) | (adj[static_cast<std::size_t>(i)] & adj[static_cast<std::size_t>(j)]);
    for (; centres; centres &= centres - 1) {
      const int w = std::countr_zero(centres);
      if (has_matching(adj, adj[static_cast<std::size_t>(w)], t.size)) return true;
    }
    return false;
  }

  std::array<Target, 2> targets_;  // index = colour (0 red, 1 blue)
  int n_;
  bool symmetric_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> colors_;
  std::array<std::array<Mask, kMaxSearchOrder>, 2> adj_{};
};

}  // namespace

std::optional<TwoColoring> find_avoiding_coloring(Target blue_target, Target red_target, int N, int workers,
                                                  long long* nodes) {
  if (N < 1 || N > kMaxSearchOrder) throw CapExceeded("search order out of range");
  if (blue_target.size < 1 || red_target.size < 1) throw std::invalid_argument("target sizes must be positive");
  Search root(blue_target, red_target, N);
  long long total_nodes = 0;

  // Enumerate surviving prefixes of the first few edges; each is an
  // independent subtree. The lowest-index successful subtree wins.
  const std::size_t depth = std::min<std::size_t>(root.edge_count(), 8);
  std::vector<std::vector<int>> prefixes;
  {
    std::vector<int> current;
    auto collect = [&](auto&& self, std::size_t e) -> void {
      ++total_nodes;
      if (e == depth) {
        prefixes.push_back(current);
        return;
      }
      for (int c = 0; c < 2; ++c) {
        if (!root.allowed(e, c)) continue;
        const bool ok = root.push(e, c);
        if (ok) {
          current.push_back(c);
          self(self, e + 1);
          current.pop_back();
        }
        root.pop(e);
      }
    };
    collect(collect, 0);
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{prefixes.size()};
  std::mutex lock;
  std::optional<TwoColoring> found;
  std::atomic<long long> node_sum{0};

  auto work = [&] {
    long long local_nodes = 0;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size() || i > best.load()) break;
      Search s(blue_target, red_target, N);
      bool ok = true;
      for (std::size_t e = 0; e < prefixes[i].size() && ok; ++e) ok = s.push(e, prefixes[i][e]);
      if (ok && s.extend(prefixes[i].size(), local_nodes)) {
        std::lock_guard<std::mutex> guard(lock);
        if (i < best.load()) {
          best.store(i);
          found = s.coloring();
        }
      }
    }
    node_sum += local_nodes;
  };
  const int threads = std::max(1, workers);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (nodes) *nodes += total_nodes + node_sum.load();
  return found;
}

SearchResult brute_force_ramsey(Target blue_target, Target red_target, int cap, int workers) {
  const bool fan_fan = blue_target.kind == Target::Kind::Fan && red_target.kind == Target::Kind::Fan;
  const int limit = fan_fan ? kFanFanCap : kStarFanCap;
  if (cap < 1 || cap > limit) {
    throw CapExceeded("cap " + std::to_string(cap) + " outside [1, " + std::to_string(limit) + "] for (" +
                      blue_target.name() + ", " + red_target.name() + ")");
  }
  SearchResult result;
  std::optional<TwoColoring> previous;
  for (int N = 1; N <= cap; ++N) {
    auto avoiding = find_avoiding_coloring(blue_target, red_target, N, workers, &result.nodes);
    if (!avoiding) {
      result.exact = true;
      result.value = N;
      result.witness = std::move(previous);
      return result;
    }
    previous = std::move(avoiding);
  }
  result.exact = false;
  result.value = cap + 1;
  result.witness = std::move(previous);
  return result;
}

}  // namespace fanramsey
