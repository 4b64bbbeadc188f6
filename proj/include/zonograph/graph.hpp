#pragma once

#include <vector>

#include "zonograph/rational.hpp"
#include "zonograph/subset.hpp"

namespace zonograph {

struct Edge {
  int i = 0;
  int j = 0;
  Rational b;  // strictly positive weight
};

bool operator==(const Edge& a, const Edge& b);

// Weighted undirected graph on {0,...,n}. Immutable after construction.
// Zero-weight edges are dropped (absence and weight 0 are the same thing);
// negative weights, repeats and out-of-range endpoints are rejected.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int vertex_count() const { return n_ + 1; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int i, int j) const;
  /// Weight of (i,j); zero when the edge is absent.
  Rational weight(int i, int j) const;

 private:
  int n_;
  std::vector<Edge> edges_;  // sorted by (i,j), i < j
};

/// Edges with exactly one end in S.
std::vector<Edge> cut_edges(const Graph& g, Mask s);

/// Vertex sets of the connected components (isolated vertices included).
std::vector<Mask> components(const Graph& g);

int component_count(const Graph& g);

/// Graph rank: n+1 minus the number of connected components.
int graph_rank(const Graph& g);

/// True iff removing the cut of S drops the rank by exactly one.
/// S must be nonempty and proper.
bool is_minimal_cut(const Graph& g, Mask s);

bool is_spanning_tree(const Graph& g);

// Standard families. The weight-list overloads take weights in edge order:
// complete lexicographic (0,1),(0,2),...; circuit (0,1),(1,2),...,(0,n);
// path (i,i+1); star (0,i).
Graph complete_graph(int n, const Rational& b);
Graph complete_graph(int n, const std::vector<Rational>& b);
Graph circuit_graph(int n, const Rational& b);
Graph circuit_graph(int n, const std::vector<Rational>& b);
Graph path_graph(int n, const Rational& b);
Graph path_graph(int n, const std::vector<Rational>& b);
Graph star_graph(int n, const Rational& b);
Graph star_graph(int n, const std::vector<Rational>& b);

}  // namespace zonograph
