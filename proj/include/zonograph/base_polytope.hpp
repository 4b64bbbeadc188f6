#pragma once

#include <utility>
#include <vector>

#include "zonograph/graph.hpp"
#include "zonograph/polytope.hpp"
#include "zonograph/set_function.hpp"

namespace zonograph {

// The base polytope of a submodular function f with f(empty) = f(N) = 0:
// all x on the sum-zero hyperplane with <e_S, x> <= f(S) for every S.

/// Strictly nested proper subsets S_1 c S_2 c ... c S_n with |S_i| = i;
/// the empty set and N are implicit.
using Chain = std::vector<Mask>;

/// Permutation of {0,...,n}; order[k] is the element in position k.
using Order = std::vector<int>;

/// Vertex with coordinates f(S_i) - f(S_im1) assigned to the element each
/// chain step adds. Rejects non-nested input.
QVector vertex_from_chain(const SetFunction& f, const Chain& chain);

/// Same vertex through the prefix chain of an order.
QVector vertex_from_order(const SetFunction& f, const Order& o);

/// Closed form for cut functions: x_i = (weights to later elements)
/// minus (weights to earlier elements).
QVector vertex_from_order(const Graph& g, const Order& o);

/// All vertices by running every order; exact dedup, sorted. Throws on
/// non-submodular input (message carries a violating pair).
std::vector<QVector> enumerate_vertices(const SetFunction& f);

/// Subsets S with <e_S, x> = f(S), as masks over the full power set.
/// Throws when x violates some row, naming it.
std::vector<Mask> tight_sets(const SetFunction& f, const QVector& x);

/// A point of the polytope is a vertex iff its tight family contains a
/// full chain, one set of every cardinality.
bool is_vertex(const SetFunction& f, const QVector& x);

/// Canonical subsets (0-free side) inducing minimal cuts, with their cut
/// values: the facet index set of the base polytope of the cut function.
std::vector<std::pair<Mask, Rational>> facet_rows(const Graph& g);

struct SupportValue {
  Rational alpha;       // supporting level: the cut value of S
  QVector face_center;  // center of the supported face
};

/// Supporting level of the hyperplane normal e_S and the face center
/// sum of b_t <e_S, t> t over the graph roots.
SupportValue support_value(const Graph& g, Mask s);

/// Two-sided rows |<e_S, x>| <= f(S) over nonempty S avoiding 0;
/// equivalent to the one-sided system for symmetric f.
std::vector<std::pair<Mask, Rational>> symmetric_hrep(const SetFunction& f);

/// Independent oracle: intersects every n-subset of the tight-row
/// candidates with the sum-zero hyperplane and keeps feasible solutions.
/// Expensive; for cross-validation at desk scale.
std::vector<QVector> vertices_by_row_intersection(const SetFunction& f);

/// Restricted-row variant (rows as (S, bound) one-sided over given masks
/// and both signs); used to confirm facet sufficiency.
std::vector<QVector> vertices_by_row_intersection(
    const SetFunction& f, const std::vector<std::pair<Mask, Rational>>& rows);

/// Full polytope of a graph cut function: Edmonds vertices, minimal-cut
/// facet pairs, exact incidence.
Polytope build_base_polytope(const Graph& g);

}  // namespace zonograph
