#pragma once

#include <json.hpp>

#include "zonograph/gallery.hpp"
#include "zonograph/graph.hpp"
#include "zonograph/polytope.hpp"
#include "zonograph/roots.hpp"
#include "zonograph/set_function.hpp"
#include "zonograph/zonotope.hpp"

namespace zonograph {

// File formats. Rationals travel as canonical reduced strings; parsing an
// emitted file reproduces the in-memory value bit-exactly.
//
//   graph     {"n": int, "edges": [{"i": int, "j": int, "b": "p/q"}]}
//   function  {"n": int, "values": {"<mask>": "p/q"}}   (0-free masks only;
//             the complement side is filled in by symmetry)
//   polytope  {"n": int, "dim": int, "vertices": [["p/q",...]],
//              "facets": [{"S": [ints], "beta": "p/q"}],
//              "incidence": [[0/1,...]]}
//   vectors   {"vectors": [[int,...]]}

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json set_function_to_json(const SetFunction& f);
SetFunction set_function_from_json(const nlohmann::json& j);

nlohmann::json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j);

nlohmann::json vectors_to_json(const std::vector<IntVector>& vectors);
std::vector<IntVector> vectors_from_json(const nlohmann::json& j);

nlohmann::json tiling_report_to_json(const TilingReport& rep);

nlohmann::json gallery_item_to_json(const GalleryItem& item);

/// Loads and parses a JSON file; throws std::runtime_error with a one-line
/// diagnostic on I/O or format problems.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace zonograph
