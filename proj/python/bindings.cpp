#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treelect/generators.hpp"
#include "treelect/harness.hpp"
#include "treelect/json_io.hpp"
#include "treelect/oracles.hpp"
#include "treelect/pairbreaking.hpp"
#include "treelect/schemes.hpp"
#include "treelect/tree_code.hpp"
#include "treelect/tree_io.hpp"

namespace py = pybind11;
using namespace treelect;

namespace {

// JSON travels as text; the Python side decodes with the json module.
std::string outcome_json(const PortTree& t, const std::string& scheme, std::optional<int> tau) {
  AdviceScheme s = scheme_by_name(scheme);
  return outcome_to_json(run_scheme(t, s, tau ? *tau : s.default_time(t))).dump();
}

std::string sweep_csv(const std::string& config_json) {
  return to_csv(run_sweep(parse_config(nlohmann::json::parse(config_json))));
}

}  // namespace

PYBIND11_MODULE(_treelect, m) {
  m.doc() = "Leader election with advice in anonymous port-labelled trees";

  static py::exception<Error> error(m, "TreelectError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<PortTree>(m, "PortTree")
      .def_static("parse", [](const std::string& text) { return parse_tree(text); })
      .def_static("read", &read_tree_file)
      .def("format", &format_tree)
      .def("node_count", &PortTree::node_count)
      .def("degree", &PortTree::degree)
      .def("neighbour", [](const PortTree& t, Node v, Port p) {
        Link l = t.link(v, p);
        return std::make_pair(l.node, l.port);
      })
      .def("__eq__", &PortTree::operator==)
      .def("__repr__", [](const PortTree& t) { return "<PortTree n=" + std::to_string(t.node_count()) + ">"; });

  m.def("diameter", [](const PortTree& t) { return diameter(t); });
  m.def("centre", [](const PortTree& t) {
    Centre c = centre(t);
    std::vector<Node> nodes{c.a};
    if (c.b) nodes.push_back(*c.b);
    return nodes;
  });
  m.def("is_symmetric", &is_symmetric);
  m.def("tree_hash", &tree_hash);
  m.def("canonical_root", &canonical_root);
  m.def("xi", [](const PortTree& t) { return xi(t).xi; });
  m.def("xi_json", [](const PortTree& t) { return xi_to_json(t, xi(t)).dump(); });
  m.def("views_equal", [](const PortTree& a, Node u, const PortTree& b, Node v, int r) {
    return views_equal(extract_view(a, u, r), extract_view(b, v, r));
  });

  m.def("scheme_names", &scheme_names);
  m.def("elect", &outcome_json, py::arg("tree"), py::arg("scheme"), py::arg("tau") = std::nullopt,
        "Run a scheme; returns the outcome as a JSON string.");
  m.def("sweep_csv", &sweep_csv, py::arg("config_json"));

  m.def("gen_path", &gen_path);
  m.def("gen_intro_line", &gen_intro_line);
  m.def("gen_random", &gen_random, py::arg("n"), py::arg("seed"));
  m.def("gen_random_diameter", &gen_random_diameter, py::arg("n"), py::arg("diam"), py::arg("seed"));
  m.def("gen_double_broom", [](int delta, std::uint64_t a, std::uint64_t b, int diam) {
    return gen_double_broom(delta, a, b, diam).tree;
  });
  m.def("gen_gsigma_odd", [](int n, int diam, const std::vector<int>& sigma) { return gen_gsigma_odd(n, diam, sigma).tree; });
  m.def("gen_gsigma_even", [](int n, int diam, const std::vector<int>& sigma) { return gen_gsigma_even(n, diam, sigma).tree; });
  m.def("gen_confusion", [](int delta, int h, const std::vector<int>& sigma) { return gen_confusion(delta, h, sigma).tree; });

  m.def("min_colours", &min_colours, py::arg("z"), py::arg("exhaustive_limit") = 8);
  m.def("breaker_exists", [](int z, const std::vector<std::tuple<int, int, int>>& pairs) {
    int colours = 1;
    for (auto [a, b, c] : pairs) colours = std::max(colours, c);
    PairColouring col(z, colours);
    for (auto [a, b, c] : pairs) col.set(a, b, c);
    return exists_breaker(col).has_value();
  });
}
