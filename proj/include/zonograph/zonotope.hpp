#pragma once

#include <vector>

#include "zonograph/graph.hpp"
#include "zonograph/polytope.hpp"
#include "zonograph/rational.hpp"
#include "zonograph/roots.hpp"

namespace zonograph {

// Zonotopes as Minkowski sums of root-parallel segments [-b t, b t].

struct SegmentGenerator {
  IntVector direction;  // a root e_i - e_j
  Rational half_length; // > 0
};

/// One generator per edge of the graph, direction e_i - e_j, half-length
/// the edge weight.
std::vector<SegmentGenerator> generators_of_graph(const Graph& g);

/// Weighted sum of the rank-one outer products b t t^T; exact (n+1)x(n+1)
/// Gram matrix of the associated quadratic form.
QMatrix gram_matrix(const std::vector<SegmentGenerator>& gens, int n);

/// x^T D x; equals the weighted sum of squared pairings with the roots.
Rational quadratic_form(const QMatrix& d, const QVector& x);

inline constexpr int kMaxGenerators = 20;  // sign enumeration is 2^|X|

/// Vertex set of the zonotope: all realizable sign combinations of the
/// generator endpoints. A sign vector contributes a vertex exactly when
/// some linear functional is strictly positive on every signed generator;
/// the search walks the sign tree with exact LP pruning.
std::vector<QVector> zonotope_vertices(const std::vector<SegmentGenerator>& gens,
                                       int n);

struct VertexSetDiff {
  bool equal = false;
  std::vector<QVector> only_base;      // vertices only the base-polytope route found
  std::vector<QVector> only_zonotope;  // vertices only the zonotope route found
};

/// Cross-check of the two construction routes on the same graph: Edmonds
/// order enumeration vs. signed generator sums.
VertexSetDiff equals_base_polytope(const Graph& g);

/// D * p for a facet vector p = e_S; coincides with the face center of
/// support_value.
QVector minimal_vector_map(const std::vector<SegmentGenerator>& gens, int n,
                           const IntVector& facet_vector);

/// Number of independent weight parameters: the edge count, which is the
/// dimension of the type domain of the parallelotope.
int nrd(const Graph& g);

struct BeltReport {
  std::vector<int> facet_ids;  // cyclic facet order
  int length = 0;
};

struct TilingReport {
  bool central_symmetry = false;
  bool facet_symmetry = false;
  std::vector<BeltReport> belts;
  bool belts_ok = false;        // every belt closed with length 4 or 6
  Rational vol_squared;         // squared intrinsic volume of the zonotope
  Rational lattice_gram_det;    // Gram determinant of the translate lattice
  bool volume_matches = false;
  bool tiles = false;
  std::string witness;          // first failed clause, empty when tiles
};

/// Venkov-style tiling evidence: central symmetry of body and facets,
/// belt lengths, and the exact identity between the squared zonotope
/// volume and the Gram determinant of the lattice spanned by the doubled
/// facet centers.
TilingReport tiling_check(const Polytope& p,
                          const std::vector<SegmentGenerator>& gens);

}  // namespace zonograph
