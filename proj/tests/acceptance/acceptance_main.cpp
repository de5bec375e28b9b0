// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fanramsey/bigraphic.hpp"
#include "fanramsey/constructions.hpp"
#include "fanramsey/fans.hpp"
#include "fanramsey/matching.hpp"
#include "fanramsey/ramsey.hpp"
#include "oracles.hpp"

using namespace fanramsey;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// First failure wins the detail line.
void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

Outcome construction_sweep() {
  Outcome o;
  int supported = 0;
  int skipped = 0;
  for (int n = 2; n <= 25; ++n) {
    for (int m = n + 1; m <= 2 * n + 5 && m < n * (n - 1); ++m) {
      StarFanConstruction c;
      try {
        c = star_fan_lower(m, n);
      } catch (const UnsupportedRange&) {
        ++skipped;
        continue;
      } catch (const std::exception& e) {
        fail(o, "(" + std::to_string(m) + "," + std::to_string(n) + "): " + e.what());
        continue;
      }
      ++supported;
      const WitnessReport r = verify_star_fan_witness(c.coloring, m, n);
      const double bound = (3.0 * m + std::sqrt(static_cast<double>(m) * m + 8.0 * n * n)) / 2.0 - 8.0;
      if (!r.all_hold()) fail(o, "claims fail at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      if (!(r.N + 1 > bound)) fail(o, "N+1 <= bound at (" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(supported) + " supported pairs verified, " + std::to_string(skipped) +
               " outside the supported range (b < 1)";
  }
  return o;
}

Outcome special_sweep() {
  Outcome o;
  int verified = 0;
  int skipped = 0;
  for (int n = 2; n <= 60; ++n) {
    StarFanConstruction c;
    try {
      c = star_fan_lower_special(n);
    } catch (const UnsupportedRange&) {
      ++skipped;
      continue;
    } catch (const std::exception& e) {
      fail(o, "n=" + std::to_string(n) + ": " + e.what());
      continue;
    }
    const WitnessReport r = verify_star_fan_witness(c.coloring, 2 * n, n);
    const long double r3 = std::sqrt(3.0L);
    const long long expected = 2 * static_cast<long long>(std::floor(r3 * n)) +
                               2 * static_cast<long long>(std::floor((3.0L - r3) / 2.0L * n)) - 4;
    if (!r.all_hold()) fail(o, "claims fail at n=" + std::to_string(n));
    if (c.params.N != expected) {
      fail(o, "n=" + std::to_string(n) + ": N=" + std::to_string(c.params.N) + ", closed form " +
                  std::to_string(expected));
    }
    ++verified;
  }
  if (o.pass) {
    o.detail = std::to_string(verified) + " values of n verified, N matches the closed form; " +
               std::to_string(skipped) + " unsupported (b < 1)";
  }
  return o;
}

Outcome small_ramsey() {
  Outcome o;
  std::ostringstream out;
  auto expect = [&](Target blue, Target red, int cap, int value) {
    const SearchResult r = brute_force_ramsey(blue, red, cap);
    out << "R(" << blue.name() << "," << red.name() << ")=" << r.value << " ";
    if (!r.exact || r.value != value) fail(o, "R(" + blue.name() + "," + red.name() + ") = " + std::to_string(r.value));
  };
  expect(Target::star(2), Target::fan(2), 6, 5);
  expect(Target::star(1), Target::fan(2), 6, 5);
  expect(Target::fan(1), Target::fan(1), 6, 6);

  const WitnessReport w = verify_fan_fan_witness(chromatic_lower(2), 2);
  if (!w.all_hold() || w.bound_value != 9) fail(o, "chromatic_lower(2) does not certify R(F_2) >= 9");
  const SearchResult capped = brute_force_ramsey(Target::fan(2), Target::fan(2), 8);
  if (capped.exact || capped.value != 9) fail(o, "fan-fan search at cap 8 did not report >= 9");
  out << "R(F_2)>=9 (witness on 8 vertices, search at cap 8 agrees)";
  if (o.pass) o.detail = out.str();
  return o;
}

Outcome gale_ryser() {
  Outcome o;
  long long specs = 0;
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const auto realizable = oracle::realizable_degree_pairs(a, b);
      const int total = a + b;
      std::vector<int> digits(total, 0);
      std::vector<int> xs(a);
      std::vector<int> ys(b);
      for (;;) {
        std::copy(digits.begin(), digits.begin() + a, xs.begin());
        std::copy(digits.begin() + a, digits.end(), ys.begin());
        ++specs;
        if (is_bigraphic({xs, ys}).bigraphic != (realizable.count({xs, ys}) > 0)) {
          fail(o, "disagreement at a=" + std::to_string(a) + ", b=" + std::to_string(b));
        }
        int pos = 0;
        while (pos < total && ++digits[pos] > 4) digits[pos++] = 0;
        if (pos == total) break;
      }
    }
  }

  std::mt19937_64 rng(20240401);
  int tuples = 0;
  while (tuples < 10000) {
    const int a = 1 + static_cast<int>(rng() % 30);
    const int b = 1 + static_cast<int>(rng() % 30);
    const int c = static_cast<int>(rng() % (b + 1));
    const int d = static_cast<int>(rng() % (a + 1));
    const int sigma = static_cast<int>(rng() % 6);
    const long long excess = static_cast<long long>(a) * c - static_cast<long long>(b) * d;
    if (excess < -static_cast<long long>(sigma) * b || excess > static_cast<long long>(sigma) * a) continue;
    ++tuples;
    IntervalRealization r;
    try {
      r = realize_interval({a, b, c, d, sigma});
    } catch (const std::exception& e) {
      fail(o, std::string("realize_interval threw: ") + e.what());
      continue;
    }
    const Graph& g = r.realization.graph;
    for (int i = 0; i < a; ++i)
      if (g.degree(i) > c || g.degree(i) < c - sigma) fail(o, "A-side degree outside [c - sigma, c]");
    for (int j = 0; j < b; ++j)
      if (g.degree(a + j) > d || g.degree(a + j) < d - sigma) fail(o, "B-side degree outside [d - sigma, d]");
    for (auto [u, v] : g.edges())
      if ((u < a) == (v < a)) fail(o, "edge inside one side");
  }
  if (o.pass) {
    o.detail = std::to_string(specs) + " degree pairs match enumeration; " + std::to_string(tuples) +
               " interval realizations within their windows";
  }
  return o;
}

Outcome edmonds_gallai_suite() {
  Outcome o;
  long long graphs = 0;
  long long matchings = 0;
  auto check = [&](const Graph& g) {
    ++graphs;
    const EGPartition eg = edmonds_gallai(g);
    if (auto p = check_eg_structure(g, eg)) fail(o, "structure: " + *p);
    std::set<Vertex> missed;
    for (const auto& m : all_maximum_matchings(g)) {
      ++matchings;
      if (auto p = check_eg_against_matching(g, eg, m)) fail(o, "matching: " + *p);
      const auto mate = mate_array(g.order(), m);
      for (Vertex v = 0; v < g.order(); ++v)
        if (mate[v] < 0) missed.insert(v);
    }
    std::set<Vertex> d;
    for (const auto& comp : eg.D) d.insert(comp.begin(), comp.end());
    if (d != missed) fail(o, "D differs from the vertices missed by some maximum matching");
  };
  for (int n = 0; n <= 6; ++n) oracle::for_each_graph(n, check);
  std::mt19937_64 rng(7121);
  for (int t = 0; t < 10000; ++t) {
    const int n = 7 + t % 6;
    check(oracle::random_graph(rng, n, 0.1 + (rng() % 60) / 100.0));
  }
  if (o.pass) {
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(matchings) +
               " maximum matchings checked (exhaustive to 6 vertices, random 7-12)";
  }
  return o;
}

Outcome multipartite_suite() {
  Outcome o;
  int specs = 0;
  int cycle_checks = 0;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int min_part) {
    if (left == 0) {
      if (parts.size() < 2) return;
      ++specs;
      const MultipartiteSpec spec(parts);
      const Graph g = build_complete_multipartite(spec);
      const int n = spec.order();
      const int t = spec.parts();
      if (multipartite_matching_bound(spec) != 2 * max_matching(g).size()) fail(o, "bound differs from 2 nu");
      if (t >= 3 && 2 * spec.largest() <= n) {
        for (int len = 3; len <= n; ++len, ++cycle_checks)
          if (!cycle_oracle(g, len)) fail(o, "missing cycle of length " + std::to_string(len) + " (case i)");
      } else if (t >= 3) {
        for (int len = 3; len <= 2 * (n - spec.largest()); ++len, ++cycle_checks)
          if (!cycle_oracle(g, len)) fail(o, "missing cycle of length " + std::to_string(len) + " (case ii)");
      } else {
        for (int len = 4; len <= 2 * spec.smallest(); len += 2, ++cycle_checks)
          if (!cycle_oracle(g, len)) fail(o, "missing cycle of length " + std::to_string(len) + " (case iii)");
      }
      return;
    }
    for (int s = min_part; s <= left; ++s) {
      parts.push_back(s);
      rec(left - s, s);
      parts.pop_back();
    }
  };
  for (int n = 2; n <= 10; ++n) rec(n, 1);
  if (o.pass) {
    o.detail = std::to_string(specs) + " partitions with N <= 10, " + std::to_string(cycle_checks) +
               " cycle lengths confirmed";
  }
  return o;
}

Outcome fan_extension_suite() {
  Outcome o;
  std::mt19937_64 rng(31415);
  std::ostringstream out;
  for (auto which : {ExtensionCase::I, ExtensionCase::II, ExtensionCase::III}) {
    int accepted = 0;
    int repaired = 0;
    int drawn = 0;
    while (accepted < 200 && drawn < 200000) {
      ++drawn;
      const auto draw = oracle::draw_extension_instance(rng, which, 15);
      const Matching m = find_extension_matching(draw.instance, which, draw.center);
      if (!audit_extension(draw.instance, which, draw.center, m).empty()) continue;
      ++accepted;
      try {
        const FanExtension r = fan_extend_detailed(draw.instance, which, draw.center, m);
        if (validate_fan(draw.instance.graph, r.witness, draw.instance.n)) fail(o, "invalid witness returned");
        if (!r.proof_route) ++repaired;
      } catch (const std::exception& e) {
        fail(o, std::string("case ") + to_string(which) + ": " + e.what());
      }
    }
    if (accepted < 200) fail(o, std::string("generator produced too few case ") + to_string(which) + " instances");
    out << "case " << to_string(which) << ": " << accepted << " valid (" << repaired << " via longer matching prefix); ";
  }
  if (o.pass) o.detail = out.str() + "0 invalid witnesses";
  return o;
}

Outcome high_degree_suite() {
  Outcome o;
  std::mt19937_64 rng(2718);
  int found = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + t % 5;
    const TwoColoring k = oracle::conditioned_coloring(rng, n);
    const HighDegreeFan h = high_degree_fan(k, n);
    if (!h.applicable) {
      fail(o, "conditioned colouring reported inapplicable");
      continue;
    }
    if (!h.fan || validate_fan(k.graph(h.fan->color), h.fan->witness, n)) {
      fail(o, "no monochromatic F_" + std::to_string(n) + " in trial " + std::to_string(t));
      continue;
    }
    ++found;
  }
  if (o.pass) o.detail = std::to_string(found) + "/500 conditioned colourings (n = 1..5) contain the fan";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "construction sweep", construction_sweep},
      {2, "special construction sweep", special_sweep},
      {3, "exact small Ramsey numbers", small_ramsey},
      {4, "Gale-Ryser oracle equivalence", gale_ryser},
      {5, "Edmonds-Gallai properties", edmonds_gallai_suite},
      {6, "multipartite matchings and cycles", multipartite_suite},
      {7, "fan extension soundness", fan_extension_suite},
      {8, "high monochromatic degree forces a fan", high_degree_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
