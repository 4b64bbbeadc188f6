// zonograph: build and cross-validate the parallelotopes of weighted
// graphs. Every subcommand is file-in/file-out with one JSON summary line
// on stdout. Exit codes: 0 success (check passed), 1 check failed
// (witness emitted), 2 usage or input format error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "zonograph/base_polytope.hpp"
#include "zonograph/face_lattice.hpp"
#include "zonograph/gallery.hpp"
#include "zonograph/json_io.hpp"
#include "zonograph/linalg.hpp"
#include "zonograph/set_function.hpp"
#include "zonograph/zonotope.hpp"

using namespace zonograph;
using nlohmann::json;

namespace {

void emit(const json& j) { std::cout << j.dump() << std::endl; }

json vertices_json(const std::vector<QVector>& verts, bool approx) {
  json rows = json::array();
  for (const auto& v : verts) {
    json row = json::array();
    for (const auto& c : v) row.push_back(rational_to_string(c));
    rows.push_back(std::move(row));
  }
  json out = {{"vertices", rows}};
  if (approx) {
    json arows = json::array();
    for (const auto& v : verts) {
      json row = json::array();
      for (const auto& c : v) row.push_back(approx_decimal(c));
      arows.push_back(std::move(row));
    }
    out["approx_nonauthoritative"] = arows;
  }
  return out;
}

json mask_json(Mask s) { return json(mask_elements(s)); }

int cmd_build(const std::string& graph_path, const std::string& out_path) {
  auto g = graph_from_json(load_json_file(graph_path));

  // Both construction routes must agree vertex-for-vertex.
  auto diff = equals_base_polytope(g);
  if (!diff.equal) {
    json jd = {{"ok", false},
               {"error", "construction routes disagree"},
               {"only_base", vertices_json(diff.only_base, false)["vertices"]},
               {"only_zonotope", vertices_json(diff.only_zonotope, false)["vertices"]}};
    emit(jd);
    return 1;
  }

  auto p = build_base_polytope(g);
  if (auto why = validate_polytope(p)) {
    emit({{"ok", false}, {"error", "polytope invariant failed"}, {"witness", *why}});
    return 1;
  }
  json jp = polytope_to_json(p);
  json status = {{"ok", true},
                 {"n", p.n},
                 {"dim", p.dim},
                 {"vertices", p.vertices.size()},
                 {"facets", p.facets.size()}};
  if (!out_path.empty()) {
    save_json_file(out_path, jp);
    status["out"] = out_path;
    emit(status);
  } else {
    emit(jp);
  }
  return 0;
}

int cmd_vertices(const std::string& in_path, bool approx) {
  auto p = polytope_from_json(load_json_file(in_path));
  emit(vertices_json(p.vertices, approx));
  return 0;
}

int cmd_facets(const std::string& in_path, bool approx) {
  auto p = polytope_from_json(load_json_file(in_path));
  json rows = json::array();
  for (const auto& f : p.facets) {
    json row = {{"S", mask_json(f.subset)}, {"beta", rational_to_string(f.bound)}};
    if (approx) row["beta_approx_nonauthoritative"] = approx_decimal(f.bound);
    rows.push_back(std::move(row));
  }
  emit({{"facets", rows}});
  return 0;
}

int cmd_belts(const std::string& in_path) {
  auto p = polytope_from_json(load_json_file(in_path));
  json rows = json::array();
  for (const auto& b : belts(p))
    rows.push_back({{"facets", b.facet_ids}, {"length", b.length()}});
  emit({{"belts", rows}});
  return 0;
}

int cmd_fvector(const std::string& in_path) {
  auto p = polytope_from_json(load_json_file(in_path));
  auto lat = face_lattice(p);
  emit({{"dim", lat.dim}, {"fvector", lat.f_vector()}});
  return 0;
}

int cmd_check_submodular(const std::string& fn_path) {
  auto f = set_function_from_json(load_json_file(fn_path));
  auto w = submodularity_violation(f);
  if (!w) {
    emit({{"check", "submodular"}, {"result", true}});
    return 0;
  }
  emit({{"check", "submodular"},
        {"result", false},
        {"witness",
         {{"S", mask_json(w->s)},
          {"T", mask_json(w->t)},
          {"lhs", rational_to_string(f.value(w->s) + f.value(w->t))},
          {"rhs", rational_to_string(f.value(w->s & w->t) + f.value(w->s | w->t))}}}});
  return 1;
}

int cmd_check_unimodular(const std::string& vec_path) {
  auto vectors = vectors_from_json(load_json_file(vec_path));
  auto w = unimodularity_violation(vectors);
  if (!w) {
    emit({{"check", "unimodular"}, {"result", true}});
    return 0;
  }
  emit({{"check", "unimodular"},
        {"result", false},
        {"witness", {{"basis", w->basis}, {"vector", w->vector}}}});
  return 1;
}

int cmd_check_tiling(const std::string& graph_path) {
  auto g = graph_from_json(load_json_file(graph_path));
  auto diff = equals_base_polytope(g);
  if (!diff.equal) {
    emit({{"check", "tiling"}, {"result", false}, {"witness", "routes disagree"}});
    return 1;
  }
  auto rep = tiling_check(build_base_polytope(g), generators_of_graph(g));
  json j = tiling_report_to_json(rep);
  j["check"] = "tiling";
  j["result"] = rep.tiles;
  emit(j);
  return rep.tiles ? 0 : 1;
}

int cmd_check_primitive(const std::string& graph_path) {
  auto g = graph_from_json(load_json_file(graph_path));
  auto p = build_base_polytope(g);
  bool prim = is_primitive(p);
  emit({{"check", "primitive"},
        {"result", prim},
        {"facets", p.facets.size()},
        {"facets_if_primitive", (2LL << p.dim) - 2}});
  return prim ? 0 : 1;
}

int cmd_type(const std::vector<std::string>& graph_paths) {
  auto p1 = build_base_polytope(graph_from_json(load_json_file(graph_paths[0])));
  auto p2 = build_base_polytope(graph_from_json(load_json_file(graph_paths[1])));
  auto f1 = type_fingerprint(p1);
  auto f2 = type_fingerprint(p2);
  bool same = same_type(p1, p2);
  emit({{"same_type", same},
        {"fingerprint1", f1.canon},
        {"fingerprint2", f2.canon}});
  return same ? 0 : 1;
}

int cmd_nrd(const std::string& graph_path) {
  auto g = graph_from_json(load_json_file(graph_path));
  emit({{"nrd", nrd(g)}});
  return 0;
}

std::vector<Rational> load_weights(const std::string& path) {
  auto j = load_json_file(path);
  const json& arr = j.is_array() ? j : j.at("weights");
  std::vector<Rational> w;
  for (const auto& s : arr) {
    if (!s.is_string()) throw std::runtime_error("weights must be rational strings");
    w.push_back(parse_rational_or_throw(s.get<std::string>()));
  }
  return w;
}

int cmd_gallery(const std::string& which, int n, const std::string& a_str,
                const std::string& weights_path, const std::string& graph_path,
                const std::string& out_path) {
  GalleryItem item = [&] {
    std::vector<Rational> weights;
    if (!weights_path.empty()) weights = load_weights(weights_path);
    Rational a = parse_rational_or_throw(a_str);
    if (a <= 0) throw std::runtime_error("--a must be positive");

    if (which == "permutohedron") return permutohedron_item(n, a);
    if (which == "voronoi-an")
      return weights.empty() ? voronoi_an_item(n, a) : voronoi_an_item(n, weights);
    if (which == "star-box")
      return weights.empty() ? star_box_item(n, a) : star_box_item(n, weights);
    // tree-box: explicit tree file, or the path on {0..n} by default
    if (!graph_path.empty())
      return tree_box_item(graph_from_json(load_json_file(graph_path)));
    return tree_box_item(weights.empty() ? path_graph(n, a) : path_graph(n, weights));
  }();

  json bundle = gallery_item_to_json(item);
  json status = {{"name", item.name},
                 {"n", item.n},
                 {"vertices", item.polytope.vertices.size()},
                 {"facets", item.polytope.facets.size()},
                 {"expected", item.expected}};
  if (!out_path.empty()) {
    save_json_file(out_path, bundle);
    status["out"] = out_path;
  }
  emit(status);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact parallelotopes of graph cut functions"};
  app.require_subcommand(1);

  std::string graph_path, out_path, in_path, fn_path, vec_path, weights_path;
  std::vector<std::string> type_graphs;
  bool approx = false;
  int n = 3;
  std::string a_str = "1";

  auto* build =
      app.add_subcommand("build", "graph file -> polytope JSON, both routes cross-checked");
  build->add_option("--graph", graph_path, "graph JSON file")->required();
  build->add_option("--out", out_path, "output polytope JSON file");

  auto* vertices = app.add_subcommand("vertices", "print polytope vertices");
  vertices->add_option("--in", in_path, "polytope JSON file")->required();
  vertices->add_flag("--approx", approx, "add non-authoritative decimals");

  auto* facets = app.add_subcommand("facets", "print facet rows");
  facets->add_option("--in", in_path, "polytope JSON file")->required();
  facets->add_flag("--approx", approx, "add non-authoritative decimals");

  auto* beltsc = app.add_subcommand("belts", "print belts of a polytope");
  beltsc->add_option("--in", in_path, "polytope JSON file")->required();

  auto* fvec = app.add_subcommand("fvector", "print the f-vector");
  fvec->add_option("--in", in_path, "polytope JSON file")->required();

  auto* check = app.add_subcommand("check", "boolean checks with witnesses");
  check->require_subcommand(1);
  auto* sub = check->add_subcommand("submodular", "exhaustive submodularity");
  sub->add_option("--fn", fn_path, "set function JSON file")->required();
  auto* uni = check->add_subcommand("unimodular", "unimodular vector set");
  uni->add_option("--vectors", vec_path, "vectors JSON file")->required();
  auto* til = check->add_subcommand("tiling", "tiling identities of the zonotope");
  til->add_option("--graph", graph_path, "graph JSON file")->required();
  auto* prim = check->add_subcommand("primitive", "primitivity of the zonotope");
  prim->add_option("--graph", graph_path, "graph JSON file")->required();

  auto* type = app.add_subcommand("type", "compare type fingerprints of two graphs");
  type->add_option("--graph", type_graphs, "graph JSON file (give twice)")
      ->required()
      ->expected(2);

  auto* gal = app.add_subcommand("gallery", "named constructions");
  gal->require_subcommand(1);
  std::string gallery_pick;
  for (const char* name : {"permutohedron", "voronoi-an", "tree-box", "star-box"}) {
    auto* it = gal->add_subcommand(name);
    it->add_option("--n", n, "number of non-root vertices");
    auto* a_opt = it->add_option("--a", a_str, "uniform weight p/q");
    it->add_option("--weights", weights_path, "per-edge weight list JSON")
        ->excludes(a_opt);
    it->add_option("--out", out_path, "output bundle JSON file");
    if (std::string(name) == "tree-box")
      it->add_option("--graph", graph_path, "spanning tree JSON file");
    it->callback([&gallery_pick, name] { gallery_pick = name; });
  }

  auto* nrdc = app.add_subcommand("nrd", "type-domain dimension (edge count)");
  nrdc->add_option("--graph", graph_path, "graph JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  }

  try {
    if (*build) return cmd_build(graph_path, out_path);
    if (*vertices) return cmd_vertices(in_path, approx);
    if (*facets) return cmd_facets(in_path, approx);
    if (*beltsc) return cmd_belts(in_path);
    if (*fvec) return cmd_fvector(in_path);
    if (*check) {
      if (*sub) return cmd_check_submodular(fn_path);
      if (*uni) return cmd_check_unimodular(vec_path);
      if (*til) return cmd_check_tiling(graph_path);
      if (*prim) return cmd_check_primitive(graph_path);
    }
    if (*type) return cmd_type(type_graphs);
    if (*gal)
      return cmd_gallery(gallery_pick, n, a_str, weights_path, graph_path, out_path);
    if (*nrdc) return cmd_nrd(graph_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}
