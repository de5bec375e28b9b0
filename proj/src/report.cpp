#include "fanramsey/report.hpp"

namespace fanramsey {

namespace {

nlohmann::json edge_list(const std::vector<Edge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

nlohmann::json block(const Block& b) { return {{"first", b.first}, {"size", b.size}}; }

}  // namespace

nlohmann::json to_json(const Matching& m) { return {{"size", m.size()}, {"edges", edge_list(m.edges)}}; }

nlohmann::json to_json(const EGPartition& eg) {
  return {{"A", eg.A}, {"C", eg.C}, {"D", eg.D}, {"p", eg.p()}, {"deficiency", eg.deficiency}, {"nu", eg.nu}};
}

nlohmann::json to_json(const FanWitness& w) {
  return {{"center", w.center}, {"size", w.size()}, {"spokes", edge_list(w.spokes)}};
}

nlohmann::json to_json(const MonoFan& f) {
  auto j = to_json(f.witness);
  j["color"] = color_name(f.color);
  return j;
}

nlohmann::json to_json(const BigraphicCertificate& c) {
  nlohmann::json j{{"bigraphic", c.bigraphic}, {"failure", to_string(c.failure)}};
  if (c.failure == BigraphicFailure::PrefixViolated) {
    j["violated_k"] = c.violated_k;
    j["prefix_sum"] = c.lhs;
    j["capacity"] = c.rhs;
  } else if (c.failure == BigraphicFailure::SumMismatch) {
    j["sum_x"] = c.lhs;
    j["sum_y"] = c.rhs;
  }
  return j;
}

nlohmann::json to_json(const BipartiteRealization& r) {
  return {{"a", r.a}, {"b", r.b}, {"edges", edge_list(r.graph.edges())}};
}

nlohmann::json to_json(const IntervalRealization& r) {
  return {{"excess", r.excess},
          {"reduced_side", r.a_side_reduced ? "A" : "B"},
          {"q", r.q},
          {"r", r.r},
          {"a_degrees", r.degrees.xs},
          {"b_degrees", r.degrees.ys},
          {"realization", to_json(r.realization)}};
}

nlohmann::json to_json(const ConstructionParams& p) {
  return {{"m", p.m},
          {"n", p.n},
          {"a", p.a},
          {"b", p.b},
          {"sigma", p.sigma},
          {"N", p.N},
          {"blocks", {{"X1", block(p.x1)}, {"X2", block(p.x2)}, {"Y1", block(p.y1)}, {"Y2", block(p.y2)}}},
          {"claimed_bound", p.claimed_bound}};
}

nlohmann::json to_json(const FormulaResult& f) {
  return {{"regime", to_string(f.regime)},
          {"lower", f.lower},
          {"upper", f.upper},
          {"exactness", f.exact ? "exact" : "within-additive-constant"}};
}

nlohmann::json to_json(const FanRamseyBounds& b) {
  return {{"lower", b.lower},
          {"upper", b.upper},
          {"epsilon", b.epsilon},
          {"gate", b.gate},
          {"upper_valid", b.upper_valid}};
}

nlohmann::json to_json(const DiracThreshold& t) {
  return {{"case", t.case_label},
          {"threshold", t.value},
          {"alpha", t.alpha},
          {"constant_unresolved", t.constant_unresolved}};
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json j{{"exact", r.exact}, {"value", r.value}};
  if (r.witness) {
    j["witness_order"] = r.witness->order();
    j["witness_red_edges"] = edge_list(r.witness->red().edges());
  }
  return j;
}

nlohmann::json to_json(const NeighborhoodStructure& s) {
  nlohmann::json j{{"applicable", s.applicable}, {"host_order", s.host_order}};
  if (!s.applicable) {
    j["reason"] = s.reason;
    return j;
  }
  j["nu"] = s.nu;
  j["partition"] = to_json(s.partition);
  j["facts"] = {{"nu_identity", s.nu_identity},
                {"odd_count_bound", s.odd_count_bound},
                {"cross_edges_other_color", s.cross_edges_other_color}};
  return j;
}

}  // namespace fanramsey
