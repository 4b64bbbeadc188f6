#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zonograph/rational.hpp"
#include "zonograph/subset.hpp"

namespace zonograph {

struct FacetRow {
  Mask subset = 0;   // the inequality <e_S, x> <= bound; complements give
  Rational bound;    // the opposite facet of the pair
};

// Exact V- plus H-representation with the vertex-facet incidence table.
// Lives on the sum-zero hyperplane of R^(n+1); dim is the intrinsic
// dimension. Vertices are sorted lexicographically, facets by canonical
// subset mask with the 0-free side first, so equal polytopes serialize
// identically.
struct Polytope {
  int n = 0;
  int dim = 0;
  std::vector<QVector> vertices;
  std::vector<FacetRow> facets;
  std::vector<std::vector<bool>> incidence;  // [vertex][facet]

  std::vector<int> facet_vertices(int facet_id) const;
};

/// Assembles a polytope from vertices and facet rows: sorts canonically,
/// computes incidence by exact tightness, and drops rows that support the
/// same face as an earlier row (possible only below full rank).
Polytope make_polytope(int n, std::vector<QVector> vertices,
                       std::vector<FacetRow> rows);

/// Structural invariant check; nullopt when consistent, else a message.
/// Verifies feasibility of every vertex, the sum-zero equality, central
/// symmetry, and that every facet carries at least dim affinely
/// independent vertices.
std::optional<std::string> validate_polytope(const Polytope& p);

bool same_vertex_set(const Polytope& a, const Polytope& b);

}  // namespace zonograph
