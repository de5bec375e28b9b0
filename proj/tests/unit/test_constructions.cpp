#include <catch_amalgamated.hpp>

#include <cmath>

#include "fanramsey/constructions.hpp"
#include "fanramsey/fans.hpp"
#include "fanramsey/matching.hpp"

using namespace fanramsey;

TEST_CASE("star-fan parameters at (10,5)") {
  const ConstructionParams p = star_fan_params(10, 5);
  CHECK(p.a == 7);
  CHECK(p.b == 2);
  CHECK(p.sigma == 3);
  CHECK(p.N == 18);
  CHECK(p.x1.first == 0);
  CHECK(p.x2.first == 7);
  CHECK(p.y1.first == 14);
  CHECK(p.y2.first == 16);
  CHECK(p.claimed_bound == Catch::Approx((30 + std::sqrt(300.0)) / 2 - 8));
}

TEST_CASE("star-fan colouring at (10,5)") {
  const auto c = star_fan_lower(10, 5);
  const Graph& red = c.coloring.red();
  CHECK(c.coloring.order() == 18);
  CHECK(red.min_degree() >= 8);
  CHECK_FALSE(find_fan(red, 5).has_value());
  CHECK(max_blue_star(c.coloring).degree <= 9);
  // X_i and Y_1 u Y_2 are internally blue.
  const auto& p = c.params;
  for (const Block& blk : {p.x1, p.x2})
    for (Vertex u = blk.first; u < blk.first + blk.size; ++u)
      for (Vertex v = u + 1; v < blk.first + blk.size; ++v) CHECK_FALSE(red.has_edge(u, v));
  for (Vertex u = p.y1.first; u < p.N; ++u)
    for (Vertex v = u + 1; v < p.N; ++v) CHECK_FALSE(red.has_edge(u, v));
  // X1 - Y1 degrees follow the interval split 2,1,1,1,1,1,1 / 4,4.
  for (Vertex v = p.y1.first; v < p.y1.first + p.y1.size; ++v) {
    int into_x1 = 0;
    for (Vertex u : red.neighbors(v)) into_x1 += p.x1.contains(u) ? 1 : 0;
    CHECK(into_x1 == 4);
  }
}

TEST_CASE("star-fan unsupported range") {
  CHECK(star_fan_b(4, 3) == 0);
  CHECK_THROWS_AS(star_fan_lower(4, 3), UnsupportedRange);
  CHECK_THROWS_AS(star_fan_lower(5, 3), UnsupportedRange);
  CHECK_THROWS_AS(star_fan_lower(3, 3), UnsupportedRange);
  CHECK_THROWS_AS(star_fan_lower(3, 1), UnsupportedRange);
}

TEST_CASE("star-fan arithmetic over the sweep range") {
  int supported = 0;
  for (int n = 2; n <= 25; ++n) {
    for (int m = n + 1; m <= 2 * n + 5 && m < n * (n - 1); ++m) {
      ConstructionParams p;
      try {
        p = star_fan_params(m, n);
      } catch (const UnsupportedRange&) {
        CHECK(star_fan_b(m, n) < 1);
        continue;
      }
      ++supported;
      REQUIRE(p.sigma >= 2);
      REQUIRE(p.sigma <= 4);
      const long long excess = static_cast<long long>(p.a) * (n - 1 - p.b) - static_cast<long long>(p.b) * (n - 1);
      REQUIRE(excess >= -static_cast<long long>(p.sigma) * p.b);
      REQUIRE(excess <= static_cast<long long>(p.sigma) * p.a);
      REQUIRE(p.N + 1 > p.claimed_bound);
      // Floors agree with floating point away from integer boundaries.
      const double s = std::sqrt(static_cast<double>(m) * m + 8.0 * n * n);
      REQUIRE(p.a == static_cast<int>(std::floor((m + s) / 2 - n + 1e-12)) - 1);
      REQUIRE(p.b == static_cast<int>(std::floor(n - (s - m) / 4 + 1e-12)) - 1);
    }
  }
  CHECK(supported == 427);
}

TEST_CASE("special construction") {
  const ConstructionParams p = star_fan_special_params(5);
  CHECK(p.a == 7);
  CHECK(p.b == 2);
  CHECK(p.N == 18);
  CHECK(p.sigma == 3);
  CHECK_THROWS_AS(star_fan_lower_special(2), UnsupportedRange);
  CHECK_THROWS_AS(star_fan_lower_special(3), UnsupportedRange);
  const auto c = star_fan_lower_special(5);
  CHECK(c.coloring.red().min_degree() >= 18 - 10);
  CHECK_FALSE(find_fan(c.coloring.red(), 5).has_value());
  for (int n = 4; n <= 60; ++n) {
    const ConstructionParams s = star_fan_special_params(n);
    REQUIRE(s.N > (3 + std::sqrt(3.0)) * n - 8);
    REQUIRE(s.N == star_fan_params(2 * n, n).N);
  }
}

TEST_CASE("chromatic construction") {
  const TwoColoring k1 = chromatic_lower(1);
  CHECK(k1.red().size() == 2);
  CHECK(k1.blue().size() == 4);
  for (int n = 1; n <= 3; ++n) {
    const TwoColoring k = chromatic_lower(n);
    CHECK(k.order() == 4 * n);
    CHECK_FALSE(find_mono_fan(k, n).has_value());
    // Blue is K_{2n,2n}; red is two K_{2n}.
    CHECK(k.blue() == complete_bipartite(2 * n, 2 * n));
    for (Vertex v = 0; v < 4 * n; ++v) CHECK(k.degree(v, Color::Red) == 2 * n - 1);
  }
}

TEST_CASE("Turan-type constructions") {
  const auto tri = turan_lower(12, 4);
  CHECK(tri.regime == TuranRegime::Tripartite);
  CHECK(tri.part_sizes == std::vector<int>{3, 3, 6});
  CHECK(tri.graph == build_complete_multipartite(MultipartiteSpec({3, 3, 6})));
  CHECK_FALSE(find_fan(tri.graph, 4).has_value());

  const auto reg = turan_lower(10, 4);
  CHECK(reg.regime == TuranRegime::NearRegular);
  CHECK(reg.graph.min_degree() == 7);
  CHECK(reg.graph.max_degree() == 7);
  CHECK_FALSE(find_fan(reg.graph, 4).has_value());

  const auto odd = turan_lower(11, 4);
  CHECK(odd.regime == TuranRegime::NearRegular);
  CHECK(odd.graph.min_degree() == 6);
  CHECK(odd.graph.max_degree() == 7);

  const auto bip = turan_lower(20, 3);
  CHECK(bip.regime == TuranRegime::BipartitePlusCliques);
  CHECK(bip.graph.size() == 102);
  CHECK(efgg_extremal_number(20, 3) == 106);
  CHECK(static_cast<long long>(bip.graph.size()) <= efgg_extremal_number(20, 3));
  CHECK_FALSE(find_fan(bip.graph, 3).has_value());

  CHECK_THROWS_AS(turan_lower(8, 4), UnsupportedRange);
  CHECK_THROWS_AS(turan_lower(8, 0), UnsupportedRange);
}

TEST_CASE("Turan-type constructions stay fan-free across parameters") {
  for (int n = 5; n <= 30; ++n)
    for (int k = 1; 2 * k < n; ++k) REQUIRE_NOTHROW(turan_lower(n, k));
}

TEST_CASE("extremal number values") {
  CHECK(efgg_extremal_number(20, 2) == 100 + 4 - 3);
  CHECK(efgg_extremal_number(21, 1) == 110);
}

TEST_CASE("minimum degree thresholds") {
  const auto small = dirac_threshold(100, 5);
  CHECK(small.case_label == 1);
  CHECK(small.value == 50.5);
  CHECK_FALSE(small.constant_unresolved);

  const auto large = dirac_threshold(99, 33);
  CHECK(large.case_label == 3);
  CHECK(large.value == 66.0);

  const auto mid = dirac_threshold(100, 20);
  CHECK(mid.case_label == 2);
  CHECK(mid.value == Catch::Approx(57.0156).margin(1e-3));
  CHECK(mid.constant_unresolved);

  CHECK_THROWS_AS(dirac_threshold(10, 5), UnsupportedRange);
  CHECK_THROWS_AS(dirac_threshold(10, 0), UnsupportedRange);
}
