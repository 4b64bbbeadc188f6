#include "zonograph/gallery.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "zonograph/base_polytope.hpp"
#include "zonograph/face_lattice.hpp"
#include "zonograph/linalg.hpp"
#include "zonograph/roots.hpp"
#include "zonograph/set_function.hpp"

namespace zonograph {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("gallery: expected count failed: " + what);
}

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

int facet_pair_count(const Polytope& p) {
  std::set<Mask> canon;
  for (const auto& row : p.facets) canon.insert(canonical_mask(row.subset, p.n));
  return static_cast<int>(canon.size());
}

}  // namespace

GalleryItem permutohedron_item(int n, const Rational& a) {
  if (n < 1) throw std::invalid_argument("permutohedron: n must be >= 1");
  if (a <= 0) throw std::invalid_argument("permutohedron: a must be positive");
  GalleryItem item{.name = "permutohedron",
                   .n = n,
                   .graph = complete_graph(n, a),
                   .polytope = {},
                   .expected = {}};
  item.polytope = build_base_polytope(item.graph);

  const long long nv = factorial(n + 1);
  const long long nf = (2LL << n) - 2;
  require(static_cast<long long>(item.polytope.vertices.size()) == nv,
          "permutohedron vertex count");
  require(static_cast<long long>(item.polytope.facets.size()) == nf,
          "permutohedron facet count");

  // Every vertex is a permutation of (na, (n-2)a, ..., -na).
  QVector ladder(n + 1);
  for (int i = 0; i <= n; ++i) ladder[i] = Rational(n - 2 * i) * a;
  for (auto v : item.polytope.vertices) {
    std::sort(v.begin(), v.end());
    QVector lad = ladder;
    std::sort(lad.begin(), lad.end());
    require(v == lad, "permutohedron vertex is not a ladder permutation");
  }
  require(is_primitive(item.polytope), "permutohedron primitivity");

  item.expected = {{"vertices", nv}, {"facets", nf}, {"primitive", 1}};
  return item;
}

namespace {

GalleryItem voronoi_build(int n, Graph graph) {
  GalleryItem item{.name = "voronoi_an",
                   .n = n,
                   .graph = std::move(graph),
                   .polytope = {},
                   .expected = {}};
  item.polytope = build_base_polytope(item.graph);

  const long long pairs = static_cast<long long>(n) * (n + 1) / 2;
  require(facet_pair_count(item.polytope) == pairs, "voronoi_an facet pairs");

  // Facet vectors are exactly the subchain incidence vectors of {1..n}.
  std::set<Mask> want;
  for (const auto& v : subchain_incidence_vectors(n)) {
    Mask s = 0;
    for (int i = 0; i <= n; ++i)
      if (v[i]) s |= Mask{1} << i;
    want.insert(s);
  }
  std::set<Mask> got;
  for (const auto& row : item.polytope.facets)
    got.insert(canonical_mask(row.subset, n));
  require(want == got, "voronoi_an facet vectors are the subchains");

  // Cubical: every proper k-face is a parallelepiped (2^k vertices).
  auto lat = face_lattice(item.polytope);
  for (const auto& face : lat.faces)
    if (face.dim >= 0 && face.dim < lat.dim)
      require(static_cast<long long>(face.vertex_ids.size()) ==
                  (1LL << face.dim),
              "voronoi_an face not a parallelepiped");

  item.expected = {{"facet_pairs", pairs},
                   {"facets", 2 * pairs},
                   {"vertices", static_cast<long long>(item.polytope.vertices.size())},
                   {"nrd", n + 1}};
  return item;
}

}  // namespace

GalleryItem voronoi_an_item(int n, const Rational& b) {
  if (n < 2) throw std::invalid_argument("voronoi_an: n must be >= 2");
  return voronoi_build(n, circuit_graph(n, b));
}

GalleryItem voronoi_an_item(int n, const std::vector<Rational>& b) {
  if (n < 2) throw std::invalid_argument("voronoi_an: n must be >= 2");
  return voronoi_build(n, circuit_graph(n, b));
}

GalleryItem tree_box_item(const Graph& tree) {
  if (!is_spanning_tree(tree))
    throw std::invalid_argument("tree_box: input graph is not a spanning tree");
  const int n = tree.n();
  GalleryItem item{.name = "tree_box",
                   .n = n,
                   .graph = tree,
                   .polytope = {},
                   .expected = {}};
  item.polytope = build_base_polytope(item.graph);

  require(item.polytope.vertices.size() == (std::size_t{1} << n),
          "tree_box vertex count");
  require(facet_pair_count(item.polytope) == n, "tree_box facet pairs");

  // Laminar cut family: any two facet sets nested or disjoint, and their
  // incidence vectors independent.
  std::vector<Mask> family;
  for (const auto& row : item.polytope.facets) {
    Mask s = canonical_mask(row.subset, n);
    if (std::find(family.begin(), family.end(), s) == family.end())
      family.push_back(s);
  }
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      Mask meet = family[a] & family[b];
      require(meet == 0 || meet == family[a] || meet == family[b],
              "tree_box family not laminar");
    }
  std::vector<IntVector> vecs;
  for (Mask s : family) vecs.push_back(cut_vector(s, n));
  require(span_dim(vecs) == n, "tree_box facet vectors dependent");

  item.expected = {{"vertices", 1LL << n}, {"facet_pairs", n}};
  return item;
}

namespace {

GalleryItem star_build(int n, Graph graph) {
  GalleryItem item{.name = "star_box",
                   .n = n,
                   .graph = std::move(graph),
                   .polytope = {},
                   .expected = {}};
  item.polytope = build_base_polytope(item.graph);

  require(item.polytope.vertices.size() == (std::size_t{1} << n),
          "star_box vertex count");
  require(facet_pair_count(item.polytope) == n, "star_box facet pairs");

  // Modular away from the center and an axis box in projected coordinates.
  auto f = cut_function(item.graph);
  require(is_modular(f), "star_box restriction not modular");
  for (const auto& v : item.polytope.vertices) {
    QVector proj(v.begin() + 1, v.end());
    for (int i = 1; i <= n; ++i) {
      Rational b = item.graph.weight(0, i);
      require(proj[i - 1] == b || proj[i - 1] == -b, "star_box not an axis box");
    }
    item.projected_vertices.push_back(std::move(proj));
  }

  item.expected = {{"vertices", 1LL << n}, {"facet_pairs", n}};
  return item;
}

}  // namespace

GalleryItem star_box_item(int n, const Rational& b) {
  if (n < 1) throw std::invalid_argument("star_box: n must be >= 1");
  return star_build(n, star_graph(n, b));
}

GalleryItem star_box_item(int n, const std::vector<Rational>& b) {
  if (n < 1) throw std::invalid_argument("star_box: n must be >= 1");
  return star_build(n, star_graph(n, b));
}

}  // namespace zonograph
