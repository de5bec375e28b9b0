#include "fanramsey/constructions.hpp"

#include <cmath>

#include "fanramsey/fans.hpp"

namespace fanramsey {

namespace {

long long isqrt(long long x) {
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

long long ceil_sqrt(long long x) {
  const long long r = isqrt(x);
  return r * r == x ? r : r + 1;
}

long long floor_div(long long num, long long den) {
  long long q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

void lay_out(ConstructionParams& p) {
  p.N = 2 * p.a + 2 * p.b;
  p.x1 = {0, p.a};
  p.x2 = {p.a, p.a};
  p.y1 = {2 * p.a, p.b};
  p.y2 = {2 * p.a + p.b, p.b};
  p.claimed_bound = (3.0 * p.m + std::sqrt(static_cast<double>(p.m) * p.m + 8.0 * p.n * p.n)) / 2.0 - 8.0;
}

void join(GraphBuilder& g, Block s, Block t) {
  for (Vertex u = s.first; u < s.first + s.size; ++u)
    for (Vertex v = t.first; v < t.first + t.size; ++v) g.add_edge(u, v);
}

StarFanConstruction assemble(const ConstructionParams& p) {
  IntervalRealization between;
  try {
    between = realize_interval({p.a, p.b, p.n - 1 - p.b, p.n - 1, p.sigma});
  } catch (const RealizationError& e) {
    throw std::logic_error("X_i - Y_i interval realization infeasible for (m,n)=(" + std::to_string(p.m) + "," +
                           std::to_string(p.n) + "): " + e.what());
  }
  GraphBuilder red(p.N);
  join(red, p.x1, p.x2);
  join(red, p.x1, p.y2);
  join(red, p.x2, p.y1);
  const auto& bip = between.realization;
  for (auto [u, v] : bip.graph.edges()) {
    // u on the A side (X_i), v on the B side (Y_i).
    const int xi = u;
    const int yi = v - bip.a;
    red.add_edge(p.x1.first + xi, p.y1.first + yi);
    red.add_edge(p.x2.first + xi, p.y2.first + yi);
  }
  StarFanConstruction out{TwoColoring(red.build()), p, std::move(between)};

  const Graph& r = out.coloring.red();
  if (r.min_degree() < p.N - p.m) {
    throw std::logic_error("star-fan construction: red minimum degree " + std::to_string(r.min_degree()) + " < N - m = " +
                           std::to_string(p.N - p.m));
  }
  if (auto w = find_fan(r, p.n)) {
    throw std::logic_error("star-fan construction: red F_" + std::to_string(p.n) + " centred at " +
                           std::to_string(w->center));
  }
  return out;
}

}  // namespace

int star_fan_a(int m, int n) {
  const long long s = static_cast<long long>(m) * m + 8LL * n * n;
  return static_cast<int>(floor_div(m + isqrt(s), 2) - n - 1);
}

int star_fan_b(int m, int n) {
  const long long s = static_cast<long long>(m) * m + 8LL * n * n;
  return static_cast<int>(floor_div(4LL * n + m - ceil_sqrt(s), 4) - 1);
}

ConstructionParams star_fan_params(int m, int n) {
  if (!(m > n && n >= 2)) {
    throw UnsupportedRange("star-fan construction needs m > n >= 2, got m=" + std::to_string(m) +
                           ", n=" + std::to_string(n));
  }
  ConstructionParams p;
  p.m = m;
  p.n = n;
  p.a = star_fan_a(m, n);
  p.b = star_fan_b(m, n);
  if (p.a < 1 || p.b < 1) {
    throw UnsupportedRange("star-fan construction degenerate for (m,n)=(" + std::to_string(m) + "," +
                           std::to_string(n) + "): a=" + std::to_string(p.a) + ", b=" + std::to_string(p.b));
  }
  p.sigma = m + n - 1 - p.a - 2 * p.b;
  if (p.sigma < 2 || p.sigma > 4) {
    throw std::logic_error("star-fan construction: sigma=" + std::to_string(p.sigma) + " outside [2,4]");
  }
  lay_out(p);
  return p;
}

ConstructionParams star_fan_special_params(int n) {
  if (n < 2) throw UnsupportedRange("special star-fan construction needs n >= 2");
  const long long three_n2 = 3LL * n * n;
  ConstructionParams p;
  p.m = 2 * n;
  p.n = n;
  p.a = static_cast<int>(isqrt(three_n2) - 1);
  p.b = static_cast<int>(floor_div(3LL * n - ceil_sqrt(three_n2), 2) - 1);
  if (p.a < 1 || p.b < 1) {
    throw UnsupportedRange("special star-fan construction degenerate for n=" + std::to_string(n) +
                           ": a=" + std::to_string(p.a) + ", b=" + std::to_string(p.b));
  }
  p.sigma = 3;
  lay_out(p);
  return p;
}

StarFanConstruction star_fan_lower(int m, int n) { return assemble(star_fan_params(m, n)); }

StarFanConstruction star_fan_lower_special(int n) { return assemble(star_fan_special_params(n)); }

TwoColoring chromatic_lower(int n) {
  if (n < 1) throw UnsupportedRange("chromatic construction needs n >= 1");
  GraphBuilder red(4 * n);
  for (int half = 0; half < 2; ++half) {
    const Vertex base = half * 2 * n;
    for (Vertex u = base; u < base + 2 * n; ++u)
      for (Vertex v = u + 1; v < base + 2 * n; ++v) red.add_edge(u, v);
  }
  return TwoColoring(red.build());
}

const char* to_string(TuranRegime r) {
  switch (r) {
    case TuranRegime::BipartitePlusCliques:
      return "bipartite-plus-cliques";
    case TuranRegime::Tripartite:
      return "tripartite";
    case TuranRegime::NearRegular:
      return "near-regular";
  }
  return "?";
}

TuranConstruction turan_lower(int n, int k) {
  if (k < 1 || 2 * k >= n) {
    throw UnsupportedRange("turan construction needs 1 <= k < n/2, got n=" + std::to_string(n) +
                           ", k=" + std::to_string(k));
  }
  GraphBuilder g(n);
  TuranConstruction out{Graph{}, TuranRegime::BipartitePlusCliques, {}};
  if (4 * k <= n) {
    // Balanced K_{ceil(n/2), floor(n/2)}; two disjoint K_{k-1} in the larger side.
    const int left = (n + 1) / 2;
    join(g, {0, left}, {left, n - left});
    for (int c = 0; c < 2; ++c) {
      const Vertex base = c * (k - 1);
      for (Vertex u = base; u < base + k - 1; ++u)
        for (Vertex v = u + 1; v < base + k - 1; ++v) g.add_edge(u, v);
    }
  } else if (3 * k <= n) {
    out.regime = TuranRegime::Tripartite;
    // Remainder goes to the largest part so sizes sum to n.
    out.part_sizes = {k - 1, k - 1, n - 2 * (k - 1)};
    const Block p1{0, k - 1};
    const Block p2{k - 1, k - 1};
    const Block p3{2 * (k - 1), n - 2 * (k - 1)};
    join(g, p1, p2);
    join(g, p1, p3);
    join(g, p2, p3);
  } else {
    out.regime = TuranRegime::NearRegular;
    // Circulant of degree 2k-2, then a matching of antipodal chords.
    for (Vertex v = 0; v < n; ++v)
      for (int d = 1; d <= k - 1; ++d) g.add_edge(v, (v + d) % n);
    const int half = n / 2;
    const int chord = n % 2 == 0 ? half : (n - 1) / 2;
    for (Vertex v = 0; v < half; ++v) g.add_edge(v, v + chord);
  }
  out.graph = g.build();
  if (auto w = find_fan(out.graph, k)) {
    throw std::logic_error("turan construction contains F_" + std::to_string(k) + " centred at " +
                           std::to_string(w->center));
  }
  return out;
}

long long efgg_extremal_number(int n, int k) {
  const long long base = static_cast<long long>(n) * n / 4;
  const long long kk = k;
  return k % 2 == 1 ? base + kk * kk - kk : base + kk * kk - 3 * kk / 2;
}

DiracThreshold dirac_threshold(int n, int k) {
  if (k < 1 || 2 * k + 1 > n) {
    throw UnsupportedRange("dirac threshold needs k >= 1 and 2k + 1 <= n, got n=" + std::to_string(n) +
                           ", k=" + std::to_string(k));
  }
  DiracThreshold t;
  t.alpha = static_cast<double>(k) / n;
  if (static_cast<long long>(k) * k < n) {
    t.case_label = 1;
    t.value = (n + 1) / 2.0;
  } else if (3 * k < n) {
    t.case_label = 2;
    t.value = (1.0 + std::sqrt(1.0 + 16.0 * t.alpha * t.alpha)) / 4.0 * n;
    t.constant_unresolved = true;
  } else {
    t.case_label = 3;
    t.value = 2.0 * k;
  }
  return t;
}

}  // namespace fanramsey
