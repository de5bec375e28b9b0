#include <catch_amalgamated.hpp>

#include "fanramsey/report.hpp"

using namespace fanramsey;

TEST_CASE("partition report") {
  const auto j = to_json(edmonds_gallai(path_graph(3)));
  CHECK(j.at("A") == nlohmann::json::array({1}));
  CHECK(j.at("D") == nlohmann::json::parse("[[0],[2]]"));
  CHECK(j.at("p") == 2);
  CHECK(j.at("deficiency") == 1);
  CHECK(j.at("nu") == 1);
}

TEST_CASE("construction parameter report") {
  const auto j = to_json(star_fan_params(10, 5));
  CHECK(j.at("a") == 7);
  CHECK(j.at("b") == 2);
  CHECK(j.at("sigma") == 3);
  CHECK(j.at("N") == 18);
  CHECK(j.at("blocks").at("Y2").at("first") == 16);
}

TEST_CASE("formula and certificate reports") {
  CHECK(to_json(star_fan_formula(2, 2)).at("exactness") == "exact");
  CHECK(to_json(star_fan_formula(10, 5)).at("exactness") == "within-additive-constant");
  const auto cert = to_json(is_bigraphic({{2, 2, 0}, {3, 1}}));
  CHECK(cert.at("failure") == "Gale-Ryser prefix inequality violated");
  CHECK(cert.at("violated_k") == 2);
  const auto fan = to_json(*find_fan(complete_graph(5), 2));
  CHECK(fan.at("spokes").size() == 2);
}
