#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fanramsey/bigraphic.hpp"
#include "fanramsey/constructions.hpp"
#include "fanramsey/fans.hpp"
#include "fanramsey/graph_io.hpp"
#include "fanramsey/matching.hpp"
#include "fanramsey/ramsey.hpp"
#include "fanramsey/report.hpp"

namespace py = pybind11;
using namespace fanramsey;

namespace {

py::object to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_py(x));
      return std::move(out);
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = to_py(it.value());
      return std::move(out);
    }
    default:
      throw std::runtime_error("unsupported JSON value");
  }
}

Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

Target make_target(const std::string& kind, int size) {
  if (kind == "star") return Target::star(size);
  if (kind == "fan") return Target::fan(size);
  throw std::invalid_argument("target kind must be 'star' or 'fan'");
}

py::dict construction_dict(const StarFanConstruction& c) {
  py::dict d = to_py(to_json(c.params));
  d["coloring"] = c.coloring;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fan Ramsey constructions, matchings and verifiers";

  py::register_exception<UnsupportedRange>(m, "UnsupportedRange", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors)
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  py::class_<TwoColoring>(m, "TwoColoring")
      .def(py::init<Graph>(), py::arg("red"))
      .def_property_readonly("order", &TwoColoring::order)
      .def_property_readonly("red", &TwoColoring::red)
      .def_property_readonly("blue", &TwoColoring::blue)
      .def("color", [](const TwoColoring& k, Vertex u, Vertex v) { return color_name(k.color(u, v)); });

  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("petersen_graph", &petersen_graph);
  m.def("complement", &complement);
  m.def("complete_multipartite", [](std::vector<int> parts) {
    return build_complete_multipartite(MultipartiteSpec(std::move(parts)));
  });

  m.def("to_graph6", &format_graph6);
  m.def("from_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("to_edge_list", &format_edge_list);
  m.def("from_edge_list", [](const std::string& s) { return parse_edge_list(s); });

  m.def("max_matching", [](const Graph& g) { return max_matching(g).edges; });
  m.def("edmonds_gallai", [](const Graph& g) { return to_py(to_json(edmonds_gallai(g))); });

  m.def("is_bigraphic", [](std::vector<int> xs, std::vector<int> ys) {
    return to_py(to_json(is_bigraphic({std::move(xs), std::move(ys)})));
  });
  m.def("realize_bigraphic", [](std::vector<int> xs, std::vector<int> ys) {
    return realize_bigraphic({std::move(xs), std::move(ys)}).graph;
  });
  m.def(
      "realize_interval",
      [](int a, int b, int c, int d, int sigma) { return to_py(to_json(realize_interval({a, b, c, d, sigma}))); },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("sigma"));

  m.def(
      "find_fan",
      [](const Graph& g, int k) -> py::object {
        auto w = find_fan(g, k);
        return w ? to_py(to_json(*w)) : py::none();
      },
      py::arg("graph"), py::arg("k"));

  m.def("star_fan_lower", [](int m_, int n) { return construction_dict(star_fan_lower(m_, n)); }, py::arg("m"),
        py::arg("n"));
  m.def("star_fan_lower_special", [](int n) { return construction_dict(star_fan_lower_special(n)); }, py::arg("n"));
  m.def("chromatic_lower", &chromatic_lower, py::arg("n"));
  m.def("turan_lower", [](int n, int k) { return turan_lower(n, k).graph; }, py::arg("n"), py::arg("k"));

  m.def("verify_star_fan_witness",
        [](const TwoColoring& k, int m_, int n) { return to_py(to_json(verify_star_fan_witness(k, m_, n))); },
        py::arg("coloring"), py::arg("m"), py::arg("n"));
  m.def("verify_fan_fan_witness",
        [](const TwoColoring& k, int n) { return to_py(to_json(verify_fan_fan_witness(k, n))); },
        py::arg("coloring"), py::arg("n"));

  m.def("star_fan_formula", [](int m_, int n) { return to_py(to_json(star_fan_formula(m_, n))); }, py::arg("m"),
        py::arg("n"));
  m.def("fan_ramsey_bounds", [](int n, double eps) { return to_py(to_json(fan_ramsey_bounds(n, eps))); },
        py::arg("n"), py::arg("epsilon"));
  m.def("dirac_threshold", [](int n, int k) { return to_py(to_json(dirac_threshold(n, k))); }, py::arg("n"),
        py::arg("k"));

  m.def(
      "brute_force_ramsey",
      [](const std::string& blue_kind, int blue_size, const std::string& red_kind, int red_size, int cap, int workers) {
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = brute_force_ramsey(make_target(blue_kind, blue_size), make_target(red_kind, red_size), cap, workers);
        }
        return to_py(to_json(r));
      },
      py::arg("blue_kind"), py::arg("blue_size"), py::arg("red_kind"), py::arg("red_size"), py::arg("cap"),
      py::arg("workers") = 1);
}
