// Copyright 2026 The Andrasfai Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "andrasfai/aut_engine.h"
#include "andrasfai/certificate.h"
#include "andrasfai/errors.h"
#include "andrasfai/graph.h"
#include "andrasfai/graph_io.h"
#include "andrasfai/perm_group.h"

namespace py = pybind11;

namespace andrasfai {
namespace {

py::dict group_dict(const PermGroup& g) {
  py::dict d;
  d["degree"] = g.degree();
  d["order"] = g.order();
  std::vector<std::vector<Vertex>> elements;
  elements.reserve(g.order());
  for (const Permutation& p : g.elements()) {
    elements.emplace_back(p.images().begin(), p.images().end());
  }
  d["elements"] = std::move(elements);
  return d;
}

py::dict stats_dict(const SearchStats& s) {
  py::dict d;
  d["nodes_visited"] = s.nodes_visited;
  d["automorphisms_found"] = s.automorphisms_found;
  d["max_depth"] = s.max_depth;
  return d;
}

}  // namespace
}  // namespace andrasfai

PYBIND11_MODULE(_core, m) {
  using namespace andrasfai;
  m.doc() = "Andrasfai graphs, circulant Cayley graphs and their automorphism groups.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GroupTooLargeError>(m, "GroupTooLargeError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) {
             return Graph::from_edges(n, edges);
           }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("andrasfai", &andrasfai::andrasfai, py::arg("k"));
  m.def(
      "cayley_graph",
      [](int n, std::vector<int> connection, bool symmetrize) {
        return cayley_graph(symmetrize ? ConnectionSet::symmetrized(n, std::move(connection))
                                       : ConnectionSet(n, std::move(connection)));
      },
      py::arg("n"), py::arg("connection"), py::arg("symmetrize") = false);

  m.def("to_graph6", &to_graph6);
  m.def("from_graph6", [](const std::string& s) { return from_graph6(s); });
  m.def("to_dot", &to_dot);
  m.def("to_edge_list", &to_edge_list);

  m.def("is_connected", &is_connected);
  m.def("diameter", &diameter);
  m.def("girth", &girth);

  m.def(
      "automorphism_group",
      [](const Graph& g, bool refine, std::size_t cap) {
        EngineOptions options;
        options.refine = refine;
        options.cap = cap;
        const AutomorphismResult r = automorphism_group(g, options);
        py::dict d = group_dict(r.group);
        d["stats"] = stats_dict(r.stats);
        return d;
      },
      py::arg("graph"), py::arg("refine") = true, py::arg("cap") = kDefaultElementCap);
  m.def("brute_force_automorphisms",
        [](const Graph& g) { return group_dict(brute_force_automorphisms(g)); });
  m.def(
      "find_isomorphism",
      [](const Graph& a, const Graph& b) -> std::optional<std::vector<Vertex>> {
        auto p = find_isomorphism(a, b);
        if (!p) return std::nullopt;
        return std::vector<Vertex>(p->images().begin(), p->images().end());
      });
  m.def("is_vertex_transitive", [](const Graph& g) { return is_vertex_transitive(g); });

  m.def(
      "verify_theorem_json",
      [](int k, bool oracle) {
        CertificateOptions options;
        options.oracle = oracle;
        try {
          return to_json(verify_theorem(k, options)).dump();
        } catch (const TheoremHypothesisError& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("k"), py::arg("oracle") = false);
}
