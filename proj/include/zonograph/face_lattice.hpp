#pragma once

#include <string>
#include <vector>

#include "zonograph/polytope.hpp"

namespace zonograph {

struct Face {
  std::vector<int> vertex_ids;  // sorted
  int dim = 0;
};

// All faces of the polytope, closed under intersection, graded by exact
// affine dimension. Contains the top face (the polytope) and the empty
// bottom face (dim -1).
struct FaceLattice {
  int dim = 0;
  std::vector<Face> faces;  // graded: bottom, then by dim ascending

  /// Proper-face counts (f_0, ..., f_{dim-1}).
  std::vector<int> f_vector() const;
  std::vector<const Face*> faces_of_dim(int d) const;
};

FaceLattice face_lattice(const Polytope& p);

struct Belt {
  std::vector<int> facet_ids;  // cyclic order around the belt
  int length() const { return static_cast<int>(facet_ids.size()); }
};

/// Belts: for each parallelism class of (dim-2)-faces, the cyclic sequence
/// of facets containing them. For dim 2 the polygon itself is the single
/// belt (its full facet cycle). Requires dim >= 2 and central symmetry.
std::vector<Belt> belts(const Polytope& p);
std::vector<Belt> belts(const Polytope& p, const FaceLattice& lat);

/// The facet vectors of a 6-belt come in three pairs whose 0/1
/// representatives can be signed so that two disjoint sets union to the
/// third. Checks that relation on the belt's subset masks.
bool six_belt_relation_holds(const Polytope& p, const Belt& belt);

/// Primitive parallelotope test, evaluated intrinsically: every k-face in
/// exactly dim-k facets and the full complement of 2^(dim+1)-2 facets.
bool is_primitive(const Polytope& p);
bool is_primitive(const Polytope& p, const FaceLattice& lat);

// Canonical form of the vertex-facet incidence structure. Equal canon
// strings certify isomorphic incidence bipartite graphs; the orders map
// each vertex/facet to its canonical position and provide the explicit
// bijection between polytopes of the same type.
struct TypeFingerprint {
  std::string canon;
  std::vector<int> vertex_order;
  std::vector<int> facet_order;
};

TypeFingerprint type_fingerprint(const Polytope& p);

/// Equal fingerprints, re-certified by building the vertex/facet bijection
/// and checking it preserves incidence.
bool same_type(const Polytope& a, const Polytope& b);

}  // namespace zonograph
