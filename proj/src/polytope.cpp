#include "zonograph/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "zonograph/linalg.hpp"

namespace zonograph {

std::vector<int> Polytope::facet_vertices(int facet_id) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (incidence[v][facet_id]) out.push_back(static_cast<int>(v));
  return out;
}

namespace {

Rational row_dot(Mask s, const QVector& x) {
  Rational acc(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (mask_contains(s, static_cast<int>(i))) acc += x[i];
  return acc;
}

}  // namespace

Polytope make_polytope(int n, std::vector<QVector> vertices,
                       std::vector<FacetRow> rows) {
  Polytope p;
  p.n = n;
  std::sort(vertices.begin(), vertices.end(), lex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  p.vertices = std::move(vertices);
  p.dim = affine_rank(p.vertices);
  if (p.dim < 0) throw std::invalid_argument("make_polytope: no vertices");

  // Facet order: by canonical pair mask, 0-free side first.
  std::sort(rows.begin(), rows.end(), [n](const FacetRow& a, const FacetRow& b) {
    Mask ca = canonical_mask(a.subset, n), cb = canonical_mask(b.subset, n);
    if (ca != cb) return ca < cb;
    return mask_contains(a.subset, 0) < mask_contains(b.subset, 0);
  });

  // Tight vertex set per row; rows supporting a face already seen are
  // duplicates in the affine hull (arises only below full rank).
  std::map<std::vector<bool>, int> seen;
  std::vector<std::vector<bool>> tight_sets;
  for (const auto& row : rows) {
    std::vector<bool> tight(p.vertices.size(), false);
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
      tight[v] = row_dot(row.subset, p.vertices[v]) == row.bound;
    if (seen.contains(tight)) continue;
    seen[tight] = static_cast<int>(p.facets.size());
    p.facets.push_back(row);
    tight_sets.push_back(std::move(tight));
  }
  p.incidence.assign(p.vertices.size(), std::vector<bool>(p.facets.size(), false));
  for (std::size_t f = 0; f < tight_sets.size(); ++f)
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
      p.incidence[v][f] = tight_sets[f][v];
  return p;
}

std::optional<std::string> validate_polytope(const Polytope& p) {
  for (const auto& v : p.vertices) {
    if (static_cast<int>(v.size()) != p.n + 1) return "vertex length mismatch";
    Rational sum(0);
    for (const auto& c : v) sum += c;
    if (sum != 0) return "vertex off the sum-zero hyperplane: " + vector_to_string(v);
  }
  for (const auto& row : p.facets)
    for (const auto& v : p.vertices)
      if (row_dot(row.subset, v) > row.bound)
        return "vertex violates facet row: " + vector_to_string(v);

  // Central symmetry of the vertex set.
  for (const auto& v : p.vertices) {
    QVector neg(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
    if (!std::binary_search(p.vertices.begin(), p.vertices.end(), neg, lex_less))
      return "vertex set not centrally symmetric at " + vector_to_string(v);
  }

  for (std::size_t fidx = 0; fidx < p.facets.size(); ++fidx) {
    std::vector<QVector> pts;
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
      if (p.incidence[v][fidx]) pts.push_back(p.vertices[v]);
    if (affine_rank(pts) != p.dim - 1)
      return "facet " + std::to_string(fidx) + " is not (dim-1)-dimensional";
  }

  if (p.incidence.size() != p.vertices.size()) return "incidence rows mismatch";
  for (const auto& row : p.incidence)
    if (row.size() != p.facets.size()) return "incidence cols mismatch";
  return std::nullopt;
}

bool same_vertex_set(const Polytope& a, const Polytope& b) {
  return a.vertices == b.vertices;  // both sorted
}

}  // namespace zonograph
