#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "zonograph/base_polytope.hpp"
#include "zonograph/face_lattice.hpp"
#include "zonograph/gallery.hpp"
#include "zonograph/json_io.hpp"
#include "zonograph/set_function.hpp"
#include "zonograph/zonotope.hpp"

namespace py = pybind11;
using namespace zonograph;

namespace {

// Rationals cross the boundary as canonical "p/q" strings; subsets as
// vertex lists.

Rational q_arg(const std::string& s) { return parse_rational_or_throw(s); }

Mask mask_arg(const std::vector<int>& elems, int n) {
  return mask_from_elements(elems, n);
}

std::vector<std::string> qvec_out(const QVector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(rational_to_string(c));
  return out;
}

std::vector<std::vector<std::string>> qvecs_out(const std::vector<QVector>& vs) {
  std::vector<std::vector<std::string>> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(qvec_out(v));
  return out;
}

std::vector<Rational> q_list(const std::vector<std::string>& ws) {
  std::vector<Rational> out;
  for (const auto& w : ws) out.push_back(q_arg(w));
  return out;
}

Graph graph_arg(int n, const std::vector<std::tuple<int, int, std::string>>& edges) {
  std::vector<Edge> es;
  for (const auto& [i, j, b] : edges) es.push_back({i, j, q_arg(b)});
  return Graph(n, std::move(es));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact parallelotopes of graph cut functions";

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_arg), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::tuple<int, int, std::string>> out;
                               for (const auto& e : g.edges())
                                 out.emplace_back(e.i, e.j, rational_to_string(e.b));
                               return out;
                             })
      .def("weight", [](const Graph& g, int i, int j) {
        return rational_to_string(g.weight(i, j));
      })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("complete_graph",
        [](int n, const std::string& b) { return complete_graph(n, q_arg(b)); },
        py::arg("n"), py::arg("b") = "1");
  m.def("circuit_graph",
        [](int n, const std::string& b) { return circuit_graph(n, q_arg(b)); },
        py::arg("n"), py::arg("b") = "1");
  m.def("path_graph",
        [](int n, const std::string& b) { return path_graph(n, q_arg(b)); },
        py::arg("n"), py::arg("b") = "1");
  m.def("star_graph",
        [](int n, const std::string& b) { return star_graph(n, q_arg(b)); },
        py::arg("n"), py::arg("b") = "1");

  m.def("graph_rank", &graph_rank);
  m.def("is_minimal_cut", [](const Graph& g, const std::vector<int>& s) {
    return is_minimal_cut(g, mask_arg(s, g.n()));
  });
  m.def("cut_edges", [](const Graph& g, const std::vector<int>& s) {
    std::vector<std::tuple<int, int, std::string>> out;
    for (const auto& e : cut_edges(g, mask_arg(s, g.n())))
      out.emplace_back(e.i, e.j, rational_to_string(e.b));
    return out;
  });
  m.def("nrd", &nrd, "type-domain dimension: the edge count");

  py::class_<SetFunction>(m, "SetFunction")
      .def_property_readonly("n", &SetFunction::n)
      .def("value",
           [](const SetFunction& f, const std::vector<int>& s) {
             return rational_to_string(f.value(mask_arg(s, f.n())));
           })
      .def("is_symmetric", &SetFunction::is_symmetric);

  m.def("cut_function", &cut_function);
  m.def("is_submodular", &is_submodular);
  m.def("submodularity_violation",
        [](const SetFunction& f) -> py::object {
          auto w = submodularity_violation(f);
          if (!w) return py::none();
          return py::make_tuple(mask_elements(w->s), mask_elements(w->t));
        });
  m.def("is_modular", [](const SetFunction& f) { return is_modular(f); });
  m.def("weights_from_beta", [](const SetFunction& f) {
    std::vector<std::tuple<int, int, std::string>> out;
    for (const auto& e : weights_from_beta(f))
      out.emplace_back(e.i, e.j, rational_to_string(e.b));
    return out;
  });

  m.def("enumerate_vertices", [](const Graph& g) {
    return qvecs_out(enumerate_vertices(cut_function(g)));
  });
  m.def("zonotope_vertices", [](const Graph& g) {
    return qvecs_out(zonotope_vertices(generators_of_graph(g), g.n()));
  });
  m.def("equals_base_polytope",
        [](const Graph& g) { return equals_base_polytope(g).equal; });

  py::class_<Polytope>(m, "Polytope")
      .def_property_readonly("n", [](const Polytope& p) { return p.n; })
      .def_property_readonly("dim", [](const Polytope& p) { return p.dim; })
      .def_property_readonly("vertices",
                             [](const Polytope& p) { return qvecs_out(p.vertices); })
      .def_property_readonly("facets",
                             [](const Polytope& p) {
                               std::vector<std::pair<std::vector<int>, std::string>> out;
                               for (const auto& f : p.facets)
                                 out.emplace_back(mask_elements(f.subset),
                                                  rational_to_string(f.bound));
                               return out;
                             })
      .def_property_readonly("incidence",
                             [](const Polytope& p) { return p.incidence; })
      .def("to_json", [](const Polytope& p) { return polytope_to_json(p).dump(); })
      .def("__repr__", [](const Polytope& p) {
        return "Polytope(dim=" + std::to_string(p.dim) +
               ", vertices=" + std::to_string(p.vertices.size()) +
               ", facets=" + std::to_string(p.facets.size()) + ")";
      });

  m.def("polytope_from_json", [](const std::string& s) {
    return polytope_from_json(nlohmann::json::parse(s));
  });
  m.def("build_polytope", &build_base_polytope);

  m.def("gram_matrix", [](const Graph& g) {
    auto d = gram_matrix(generators_of_graph(g), g.n());
    std::vector<std::vector<std::string>> out;
    for (const auto& row : d) out.push_back(qvec_out(row));
    return out;
  });
  m.def("minimal_vector", [](const Graph& g, const std::vector<int>& s) {
    return qvec_out(minimal_vector_map(generators_of_graph(g), g.n(),
                                       cut_vector(mask_arg(s, g.n()), g.n())));
  });
  m.def("support_value", [](const Graph& g, const std::vector<int>& s) {
    auto sv = support_value(g, mask_arg(s, g.n()));
    return py::make_tuple(rational_to_string(sv.alpha), qvec_out(sv.face_center));
  });

  m.def("f_vector", [](const Polytope& p) { return face_lattice(p).f_vector(); });
  m.def("belts", [](const Polytope& p) {
    std::vector<std::vector<int>> out;
    for (const auto& b : belts(p)) out.push_back(b.facet_ids);
    return out;
  });
  m.def("is_primitive", [](const Polytope& p) { return is_primitive(p); });
  m.def("type_fingerprint",
        [](const Polytope& p) { return type_fingerprint(p).canon; });
  m.def("same_type", &same_type);

  m.def("tiling_check", [](const Graph& g) {
    auto rep = tiling_check(build_base_polytope(g), generators_of_graph(g));
    return tiling_report_to_json(rep).dump();
  });

  m.def("is_unimodular",
        [](const std::vector<IntVector>& vectors) { return is_unimodular(vectors); });
  m.def("subchain_incidence_vectors", &subchain_incidence_vectors);

  m.def("gallery_permutohedron", [](int n, const std::string& a) {
    return gallery_item_to_json(permutohedron_item(n, q_arg(a))).dump();
  }, py::arg("n"), py::arg("a") = "1");
  m.def("gallery_voronoi_an", [](int n, const std::string& b) {
    return gallery_item_to_json(voronoi_an_item(n, q_arg(b))).dump();
  }, py::arg("n"), py::arg("b") = "1");
  m.def("gallery_tree_box", [](const Graph& tree) {
    return gallery_item_to_json(tree_box_item(tree)).dump();
  });
  m.def("gallery_star_box", [](int n, const std::vector<std::string>& weights) {
    return gallery_item_to_json(star_box_item(n, q_list(weights))).dump();
  });

  m.attr("__version__") = "0.1.0";
}
