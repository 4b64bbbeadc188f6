#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zonograph/graph.hpp"
#include "zonograph/subset.hpp"

namespace zonograph {

// Integer vectors in the (n+1)-dimensional ambient space: the roots
// e_i - e_j of the zero-sum hyperplane and the 0/1 cut vectors e_S.
using IntVector = std::vector<int>;

/// e_i - e_j as a vector of length n+1 (requires i < j).
IntVector root_vector(int i, int j, int n);

/// The edge (i,j) of a root or its negative; nullopt for non-roots.
std::optional<std::pair<int, int>> edge_of_root(const IntVector& t);

bool is_root(const IntVector& t);

/// Incidence vector e_S of a subset.
IntVector cut_vector(Mask s, int n);

long long dot(const IntVector& a, const IntVector& b);

/// 1 when edge (i,j) crosses the cut of S, else 0. Matches <e_S, t>^2.
int edge_cut_indicator(int i, int j, Mask s);

/// One root per edge of g, direction e_i - e_j with i < j.
std::vector<IntVector> roots_of_graph(const Graph& g);

/// Dimension of the linear span (exact elimination).
int span_dim(const std::vector<IntVector>& vectors);

/// At most one of {t, -t}; pairwise non-parallel.
bool is_asymmetric(const std::vector<IntVector>& vectors);

struct UnimodularityWitness {
  std::vector<int> basis;  // indices of a basic subset
  int vector = 0;          // index of a vector with fractional coordinates
};

// Unimodularity: every vector has integer coordinates in every basic
// (maximal independent) subset. Checked by enumerating all rank-sized
// subsets and solving exactly; exponential, desk scale only.
bool is_unimodular(const std::vector<IntVector>& vectors);

std::optional<UnimodularityWitness> unimodularity_violation(
    const std::vector<IntVector>& vectors);

/// Incidence vectors of the contiguous intervals of {1,...,n}; there are
/// n(n+1)/2 of them and they form a unimodular family.
std::vector<IntVector> subchain_incidence_vectors(int n);

}  // namespace zonograph
