#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grenoble/io.hpp"

namespace py = pybind11;
using namespace grenoble;

namespace {

py::dict witness_dict(const Witness& w) {
  py::dict d;
  d["kind"] = std::string(to_string(w.kind));
  d["vertices"] = w.vertices;
  py::list paths;
  for (const auto& p : w.paths) paths.append(py::cast(p.vertices));
  d["paths"] = paths;
  return d;
}

Coloring coloring_from(const std::map<VertexId, int>& assignment) {
  Coloring c;
  c.assignment = assignment;
  for (const auto& [v, k] : assignment) c.num_colors = std::max(c.num_colors, k + 1);
  return c;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Optimal coloring of square-free Grenoble graphs";

  // Translators run newest first, so the base class goes in first.
  const auto& error = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", error.ptr());
  py::register_exception<LemmaViolation>(m, "LemmaViolation", error.ptr());
  py::register_exception<ClassViolation>(m, "ClassViolation", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<VertexId, VertexId>>& edges, const std::string& name) {
             return Graph::with_vertices(n, edges, name);
           }),
           py::arg("n"), py::arg("edges"), py::arg("name") = "")
      .def_static("from_ids",
                  [](std::vector<VertexId> ids, const std::vector<std::pair<VertexId, VertexId>>& edges) {
                    return Graph(std::move(ids), edges);
                  })
      .def_static("from_dimacs", [](const std::string& text) { return parse_dimacs(text); })
      .def("to_dimacs", [](const Graph& g) { return to_dimacs(g); })
      .def_property_readonly("name", &Graph::name)
      .def("__len__", &Graph::size)
      .def("ids", &Graph::ids)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph '" + g.name() + "' n=" + std::to_string(g.size()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("classify", [](const Graph& g) {
    const auto c = classify(g);
    py::dict d;
    d["accepted"] = c.accepted;
    d["witness"] = c.witness ? py::object(witness_dict(*c.witness)) : py::none();
    return d;
  });

  m.def(
      "color",
      [](const Graph& g, bool parallel) {
        ColorOptions options;
        options.parallel = parallel;
        ColoredResult r;
        {
          py::gil_scoped_release release;
          r = color(g, options);
        }
        py::dict d;
        d["coloring"] = r.coloring.assignment;
        d["num_colors"] = r.coloring.num_colors;
        d["clique"] = r.clique.members;
        d["tree"] = to_json(r.tree).dump();
        return d;
      },
      py::arg("graph"), py::arg("parallel") = false);

  m.def("verify_coloring", [](const Graph& g, const std::map<VertexId, int>& coloring, const VertexSet& clique) {
    return verify_coloring(g, coloring_from(coloring), CliqueWitness{clique});
  });
  m.def("chromatic_number", [](const Graph& g) { return chromatic_number_exact(g).first; });
  m.def("clique_number", [](const Graph& g) { return max_clique_exact(g).size(); });
  m.def("is_even_pair", [](const Graph& g, VertexId a, VertexId b) { return is_even_pair(g, a, b); });
  m.def("find_any_even_pair", [](const Graph& g) { return find_any_even_pair(g); });

  m.def("gen_even_prism", [](const std::array<int, 3>& lengths) { return gen_even_prism(lengths); });
  m.def("gen_violator", [](const std::string& kind) { return gen_violator(witness_kind_from_string(kind)); });
  m.def("generate", [](const std::string& spec_json) -> std::optional<Graph> {
    return generate(gen_spec_from_json(Json::parse(spec_json)));
  });
}
