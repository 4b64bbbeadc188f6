#pragma once

#include <map>
#include <string>

#include "zonograph/graph.hpp"
#include "zonograph/polytope.hpp"

namespace zonograph {

// Named constructions with closed-form combinatorics, used both as user
// generators and as regression fixtures. Construction re-verifies the
// expected counts and throws if they fail.
struct GalleryItem {
  std::string name;
  int n = 0;
  Graph graph;
  Polytope polytope;
  std::map<std::string, long long> expected;

  // star_box only: vertex coordinates with coordinate 0 dropped, where the
  // polytope is an axis-aligned box.
  std::vector<QVector> projected_vertices;
};

/// Zonotope of the complete graph with uniform weight a: the permutohedron.
/// (n+1)! vertices, all permutations of (na, (n-2)a, ..., -na), and the
/// full complement of 2^(n+1)-2 facets; primitive.
GalleryItem permutohedron_item(int n, const Rational& a);

/// Zonotope of the circuit on {0,...,n}: combinatorially the Voronoi cell
/// of the A_n lattice. Cubical; facet pairs are indexed by the n(n+1)/2
/// subchain incidence vectors; nrd = n+1.
GalleryItem voronoi_an_item(int n, const Rational& b);
GalleryItem voronoi_an_item(int n, const std::vector<Rational>& b);

/// Box of a spanning tree: 2^n vertices, n facet pairs, laminar cut family.
GalleryItem tree_box_item(const Graph& tree);

/// Star with center 0: the cut function restricted away from 0 is modular
/// and the projected polytope is the axis box with edge lengths 2 b_(0,i).
GalleryItem star_box_item(int n, const Rational& b);
GalleryItem star_box_item(int n, const std::vector<Rational>& b);

}  // namespace zonograph
