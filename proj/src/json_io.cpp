#include "zonograph/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace zonograph {

using nlohmann::json;

namespace {

Rational q_from(const json& j, const char* where) {
  if (!j.is_string())
    throw std::runtime_error(std::string("expected rational string in ") + where);
  auto r = parse_rational(j.get<std::string>());
  if (!r)
    throw std::runtime_error("malformed rational '" + j.get<std::string>() +
                             "' in " + where);
  return *r;
}

int int_from(const json& j, const char* where) {
  if (!j.is_number_integer())
    throw std::runtime_error(std::string("expected integer in ") + where);
  return j.get<int>();
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"i", e.i}, {"j", e.j}, {"b", rational_to_string(e.b)}});
  return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  int n = int_from(j.at("n"), "graph n");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({int_from(e.at("i"), "edge i"), int_from(e.at("j"), "edge j"),
                     q_from(e.at("b"), "edge weight")});
  return Graph(n, std::move(edges));
}

json set_function_to_json(const SetFunction& f) {
  json values = json::object();
  for (Mask s = 0; s <= f.universe(); ++s)
    if (!mask_contains(s, 0)) values[std::to_string(s)] = rational_to_string(f.value(s));
  return {{"n", f.n()}, {"values", values}};
}

SetFunction set_function_from_json(const json& j) {
  int n = int_from(j.at("n"), "function n");
  SetFunction f(n);
  const auto& values = j.at("values");
  for (auto it = values.begin(); it != values.end(); ++it) {
    std::size_t pos = 0;
    unsigned long mask = 0;
    try {
      mask = std::stoul(it.key(), &pos);
    } catch (...) {
      throw std::runtime_error("bad mask key '" + it.key() + "'");
    }
    if (pos != it.key().size() || mask > full_mask(n))
      throw std::runtime_error("bad mask key '" + it.key() + "'");
    if (mask_contains(static_cast<Mask>(mask), 0))
      throw std::runtime_error("mask key '" + it.key() +
                               "' is not canonical (contains vertex 0)");
    f.set_value(static_cast<Mask>(mask), q_from(it.value(), "function value"));
  }
  // Symmetric extension to the sides containing 0.
  for (Mask s = 0; s <= f.universe(); ++s)
    if (mask_contains(s, 0)) f.set_value(s, f.value(mask_complement(s, n)));
  return f;
}

json polytope_to_json(const Polytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices) {
    json row = json::array();
    for (const auto& c : v) row.push_back(rational_to_string(c));
    verts.push_back(std::move(row));
  }
  json facets = json::array();
  for (const auto& row : p.facets)
    facets.push_back(
        {{"S", mask_elements(row.subset)}, {"beta", rational_to_string(row.bound)}});
  json inc = json::array();
  for (const auto& row : p.incidence) {
    json r = json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    inc.push_back(std::move(r));
  }
  return {{"n", p.n}, {"dim", p.dim}, {"vertices", verts}, {"facets", facets},
          {"incidence", inc}};
}

Polytope polytope_from_json(const json& j) {
  Polytope p;
  p.n = int_from(j.at("n"), "polytope n");
  p.dim = int_from(j.at("dim"), "polytope dim");
  for (const auto& v : j.at("vertices")) {
    QVector row;
    for (const auto& c : v) row.push_back(q_from(c, "vertex coordinate"));
    if (static_cast<int>(row.size()) != p.n + 1)
      throw std::runtime_error("vertex length mismatch");
    p.vertices.push_back(std::move(row));
  }
  for (const auto& f : j.at("facets")) {
    std::vector<int> elems = f.at("S").get<std::vector<int>>();
    p.facets.push_back(
        {mask_from_elements(elems, p.n), q_from(f.at("beta"), "facet beta")});
  }
  for (const auto& row : j.at("incidence")) {
    std::vector<bool> r;
    for (const auto& b : row) r.push_back(int_from(b, "incidence bit") != 0);
    if (r.size() != p.facets.size())
      throw std::runtime_error("incidence width mismatch");
    p.incidence.push_back(std::move(r));
  }
  if (p.incidence.size() != p.vertices.size())
    throw std::runtime_error("incidence height mismatch");
  return p;
}

json vectors_to_json(const std::vector<IntVector>& vectors) {
  json rows = json::array();
  for (const auto& v : vectors) rows.push_back(v);
  return {{"vectors", rows}};
}

std::vector<IntVector> vectors_from_json(const json& j) {
  std::vector<IntVector> out;
  for (const auto& row : j.at("vectors")) {
    IntVector v;
    for (const auto& c : row) v.push_back(int_from(c, "vector entry"));
    out.push_back(std::move(v));
  }
  return out;
}

json tiling_report_to_json(const TilingReport& rep) {
  json belts = json::array();
  for (const auto& b : rep.belts)
    belts.push_back({{"facets", b.facet_ids}, {"length", b.length}});
  json out = {{"central_symmetry", rep.central_symmetry},
              {"facet_symmetry", rep.facet_symmetry},
              {"belts", belts},
              {"vol_squared", rational_to_string(rep.vol_squared)},
              {"lattice_gram_det", rational_to_string(rep.lattice_gram_det)},
              {"tiles", rep.tiles}};
  if (!rep.witness.empty()) out["witness"] = rep.witness;
  return out;
}

json gallery_item_to_json(const GalleryItem& item) {
  json out = {{"name", item.name},
              {"n", item.n},
              {"graph", graph_to_json(item.graph)},
              {"polytope", polytope_to_json(item.polytope)},
              {"expected", item.expected}};
  if (!item.projected_vertices.empty()) {
    json proj = json::array();
    for (const auto& v : item.projected_vertices) {
      json row = json::array();
      for (const auto& c : v) row.push_back(rational_to_string(c));
      proj.push_back(std::move(row));
    }
    out["projected_vertices"] = proj;
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace zonograph
