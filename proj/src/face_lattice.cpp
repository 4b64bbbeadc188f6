#include "zonograph/face_lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "zonograph/linalg.hpp"

namespace zonograph {

std::vector<int> FaceLattice::f_vector() const {
  std::vector<int> f(std::max(dim, 0), 0);
  for (const auto& face : faces)
    if (face.dim >= 0 && face.dim < dim) ++f[face.dim];
  return f;
}

std::vector<const Face*> FaceLattice::faces_of_dim(int d) const {
  std::vector<const Face*> out;
  for (const auto& face : faces)
    if (face.dim == d) out.push_back(&face);
  return out;
}

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

int face_dim(const Polytope& p, const std::vector<int>& vertex_ids) {
  if (vertex_ids.empty()) return -1;
  std::vector<QVector> pts;
  pts.reserve(vertex_ids.size());
  for (int v : vertex_ids) pts.push_back(p.vertices[v]);
  return affine_rank(pts);
}

}  // namespace

FaceLattice face_lattice(const Polytope& p) {
  FaceLattice lat;
  lat.dim = p.dim;

  std::vector<int> all(p.vertices.size());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<int>(v);

  // Every face is an intersection of facets, so closing the facet vertex
  // sets under pairwise intersection reaches all of them.
  std::set<std::vector<int>> known;
  known.insert(all);
  std::vector<std::vector<int>> frontier;
  for (std::size_t f = 0; f < p.facets.size(); ++f) {
    auto fv = p.facet_vertices(static_cast<int>(f));
    if (known.insert(fv).second) frontier.push_back(std::move(fv));
  }
  std::vector<std::vector<int>> facet_sets = frontier;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& face : frontier)
      for (const auto& fs : facet_sets) {
        auto meet = intersect_sorted(face, fs);
        if (known.insert(meet).second) next.push_back(std::move(meet));
      }
    frontier = std::move(next);
  }
  known.insert(std::vector<int>{});  // bottom

  for (const auto& vs : known) lat.faces.push_back({vs, face_dim(p, vs)});
  std::stable_sort(lat.faces.begin(), lat.faces.end(),
                   [](const Face& a, const Face& b) { return a.dim < b.dim; });
  return lat;
}

std::vector<Belt> belts(const Polytope& p) { return belts(p, face_lattice(p)); }

namespace {

// Canonical key for the linear direction space of a face.
QMatrix direction_space(const Polytope& p, const std::vector<int>& vertex_ids) {
  QMatrix diffs;
  for (std::size_t k = 1; k < vertex_ids.size(); ++k) {
    QVector d(p.vertices[vertex_ids[0]].size());
    for (std::size_t c = 0; c < d.size(); ++c)
      d[c] = p.vertices[vertex_ids[k]][c] - p.vertices[vertex_ids[0]][c];
    diffs.push_back(std::move(d));
  }
  return row_space_basis(std::move(diffs));
}

std::vector<Belt> polygon_belt(const Polytope& p) {
  // dim 2: facets are the edges; walk the polygon once.
  const int nf = static_cast<int>(p.facets.size());
  if (nf == 0) return {};
  std::vector<std::vector<int>> edge_verts(nf);
  for (int f = 0; f < nf; ++f) edge_verts[f] = p.facet_vertices(f);

  Belt belt;
  std::vector<bool> used(nf, false);
  int cur = 0;
  int come_from = -1;  // vertex shared with the previous edge
  for (int step = 0; step < nf; ++step) {
    belt.facet_ids.push_back(cur);
    used[cur] = true;
    int pivot = -1;
    for (int v : edge_verts[cur])
      if (v != come_from) pivot = v;
    // next unused edge through pivot
    int next = -1;
    for (int f = 0; f < nf && next < 0; ++f) {
      if (used[f]) continue;
      if (std::binary_search(edge_verts[f].begin(), edge_verts[f].end(), pivot))
        next = f;
    }
    if (next < 0) break;
    come_from = pivot;
    cur = next;
  }
  if (static_cast<int>(belt.facet_ids.size()) != nf)
    throw std::runtime_error("belts: polygon facet cycle did not close");
  return {belt};
}

}  // namespace

std::vector<Belt> belts(const Polytope& p, const FaceLattice& lat) {
  if (p.dim < 2) throw std::invalid_argument("belts: dim must be >= 2");
  {
    auto why = validate_polytope(p);
    if (why) throw std::invalid_argument("belts: " + *why);
  }
  if (p.dim == 2) return polygon_belt(p);

  auto ridges = lat.faces_of_dim(p.dim - 2);
  std::map<QMatrix, std::vector<const Face*>> classes;
  for (const Face* r : ridges)
    classes[direction_space(p, r->vertex_ids)].push_back(r);

  // Facets containing a given ridge (exactly two in a polytope).
  auto facets_of = [&](const Face& ridge) {
    std::vector<int> out;
    for (std::size_t f = 0; f < p.facets.size(); ++f) {
      auto fv = p.facet_vertices(static_cast<int>(f));
      if (std::includes(fv.begin(), fv.end(), ridge.vertex_ids.begin(),
                        ridge.vertex_ids.end()))
        out.push_back(static_cast<int>(f));
    }
    return out;
  };

  std::vector<Belt> out;
  for (const auto& [dir, members] : classes) {
    // Walk facet -> parallel ridge -> other facet until the cycle closes.
    std::map<int, std::vector<const Face*>> ridges_in_facet;
    for (const Face* r : members)
      for (int f : facets_of(*r)) ridges_in_facet[f].push_back(r);

    Belt belt;
    const Face* ridge = members.front();
    auto pair = facets_of(*ridge);
    if (pair.size() != 2)
      throw std::runtime_error("belts: ridge not on exactly two facets");
    int facet = pair[0];
    const Face* enter = ridge;
    std::set<const Face*> seen_ridges;
    while (true) {
      belt.facet_ids.push_back(facet);
      seen_ridges.insert(enter);
      const auto& inside = ridges_in_facet[facet];
      if (inside.size() != 2)
        throw std::runtime_error("belts: facet does not hold two parallel ridges");
      const Face* leave = inside[0] == enter ? inside[1] : inside[0];
      auto fp = facets_of(*leave);
      int next = fp[0] == facet ? fp[1] : fp[0];
      if (leave == members.front() && next == pair[0]) break;
      enter = leave;
      facet = next;
      if (belt.facet_ids.size() > p.facets.size())
        throw std::runtime_error("belts: walk failed to close");
    }
    if (seen_ridges.size() != members.size())
      throw std::runtime_error("belts: parallel class split across belts");
    out.push_back(std::move(belt));
  }
  return out;
}

bool six_belt_relation_holds(const Polytope& p, const Belt& belt) {
  if (belt.length() != 6) return false;
  // Three opposite facet pairs -> three canonical masks.
  std::set<Mask> canon;
  for (int f : belt.facet_ids)
    canon.insert(canonical_mask(p.facets[f].subset, p.n));
  if (canon.size() != 3) return false;
  std::vector<Mask> ms(canon.begin(), canon.end());

  // Some choice of sides A, B, C with A and B disjoint and A | B == C.
  for (int uni = 0; uni < 3; ++uni) {
    Mask c0 = ms[uni], a0 = ms[(uni + 1) % 3], b0 = ms[(uni + 2) % 3];
    for (Mask a : {a0, mask_complement(a0, p.n)})
      for (Mask b : {b0, mask_complement(b0, p.n)})
        for (Mask c : {c0, mask_complement(c0, p.n)})
          if ((a & b) == 0 && (a | b) == c) return true;
  }
  return false;
}

bool is_primitive(const Polytope& p) { return is_primitive(p, face_lattice(p)); }

bool is_primitive(const Polytope& p, const FaceLattice& lat) {
  const int d = p.dim;
  // A primitive parallelotope keeps the full complement of facet rows.
  if (static_cast<long>(p.facets.size()) != (2L << d) - 2) return false;
  for (const auto& face : lat.faces) {
    if (face.dim < 0 || face.dim >= d) continue;
    int count = 0;
    for (std::size_t f = 0; f < p.facets.size(); ++f) {
      auto fv = p.facet_vertices(static_cast<int>(f));
      if (std::includes(fv.begin(), fv.end(), face.vertex_ids.begin(),
                        face.vertex_ids.end()))
        ++count;
    }
    if (count != d - face.dim) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Canonical labeling of the incidence bipartite graph by individualization
// and refinement. Desk-scale sizes make the plain minimum-leaf search fine.

namespace {

struct IncidenceGraph {
  int nv = 0;  // vertices first, then facets
  int nf = 0;
  std::vector<std::vector<int>> adj;  // over nv+nf nodes

  int size() const { return nv + nf; }
};

IncidenceGraph incidence_graph(const Polytope& p) {
  IncidenceGraph g;
  g.nv = static_cast<int>(p.vertices.size());
  g.nf = static_cast<int>(p.facets.size());
  g.adj.resize(g.size());
  for (int v = 0; v < g.nv; ++v)
    for (int f = 0; f < g.nf; ++f)
      if (p.incidence[v][f]) {
        g.adj[v].push_back(g.nv + f);
        g.adj[g.nv + f].push_back(v);
      }
  return g;
}

// Stable partition refinement: a node's signature is its color plus the
// sorted multiset of neighbor colors; repeat until the coloring stops
// splitting. Signatures are label-independent, so the result is too.
std::vector<int> refine(const IncidenceGraph& g, std::vector<int> color) {
  while (true) {
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
    for (int u = 0; u < g.size(); ++u) {
      std::vector<int> sig;
      sig.reserve(g.adj[u].size());
      for (int w : g.adj[u]) sig.push_back(color[w]);
      std::sort(sig.begin(), sig.end());
      groups[{color[u], std::move(sig)}].push_back(u);
    }
    // Signatures extend the old coloring, so classes only ever split.
    bool split = std::set<int>(color.begin(), color.end()).size() != groups.size();
    std::vector<int> out(g.size());
    int next = 0;
    for (const auto& [sig, nodes] : groups) {
      for (int u : nodes) out[u] = next;
      ++next;
    }
    color = std::move(out);
    if (!split) return color;
  }
}

// Canonical string of a discrete coloring: the incidence rows with both
// sides in color order.
std::string leaf_string(const IncidenceGraph& g, const std::vector<int>& color) {
  std::vector<int> pos(g.size());
  std::vector<std::pair<int, int>> order;  // (color, node)
  for (int u = 0; u < g.size(); ++u) order.emplace_back(color[u], u);
  std::sort(order.begin(), order.end());
  std::vector<int> vnodes, fnodes;
  for (auto [c, u] : order)
    (u < g.nv ? vnodes : fnodes).push_back(u);
  for (std::size_t k = 0; k < vnodes.size(); ++k) pos[vnodes[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < fnodes.size(); ++k) pos[fnodes[k]] = static_cast<int>(k);

  std::string s = "v" + std::to_string(g.nv) + "f" + std::to_string(g.nf) + ":";
  std::vector<std::vector<bool>> bits(g.nv, std::vector<bool>(g.nf, false));
  for (int u : vnodes)
    for (int w : g.adj[u]) bits[pos[u]][pos[w]] = true;
  for (int r = 0; r < g.nv; ++r) {
    for (int c = 0; c < g.nf; ++c) s += bits[r][c] ? '1' : '0';
    s += ';';
  }
  return s;
}

struct CanonSearch {
  const IncidenceGraph& g;
  std::string best;
  std::vector<int> best_color;
  bool have = false;

  void visit(std::vector<int> color) {
    color = refine(g, std::move(color));
    // First color class with more than one node, in color order.
    std::map<int, std::vector<int>> cells;
    for (int u = 0; u < g.size(); ++u) cells[color[u]].push_back(u);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, nodes] : cells)
      if (nodes.size() > 1) {
        target = &nodes;
        break;
      }
    if (!target) {
      std::string s = leaf_string(g, color);
      if (!have || s < best) {
        best = std::move(s);
        best_color = std::move(color);
        have = true;
      }
      return;
    }
    for (int u : *target) {
      auto branched = color;
      // Individualize: give u a color below its cell.
      for (int& c : branched) c = 2 * c + 1;
      branched[u] -= 1;
      visit(std::move(branched));
    }
  }
};

}  // namespace

TypeFingerprint type_fingerprint(const Polytope& p) {
  IncidenceGraph g = incidence_graph(p);
  std::vector<int> color(g.size());
  for (int u = 0; u < g.size(); ++u) color[u] = u < g.nv ? 0 : 1;
  CanonSearch search{g};
  search.visit(std::move(color));

  TypeFingerprint fp;
  fp.canon = std::move(search.best);
  // Canonical positions from the winning discrete coloring.
  std::vector<std::pair<int, int>> order;
  for (int u = 0; u < g.size(); ++u) order.emplace_back(search.best_color[u], u);
  std::sort(order.begin(), order.end());
  fp.vertex_order.resize(g.nv);
  fp.facet_order.resize(g.nf);
  int vpos = 0, fpos = 0;
  for (auto [c, u] : order) {
    if (u < g.nv) fp.vertex_order[u] = vpos++;
    else fp.facet_order[u - g.nv] = fpos++;
  }
  return fp;
}

bool same_type(const Polytope& a, const Polytope& b) {
  auto fa = type_fingerprint(a);
  auto fb = type_fingerprint(b);
  if (fa.canon != fb.canon) return false;

  // Certify: map a-vertex u to the b-vertex at the same canonical position
  // and check the bijection carries incidence both ways.
  std::vector<int> v_b_at(fb.vertex_order.size()), f_b_at(fb.facet_order.size());
  for (std::size_t u = 0; u < fb.vertex_order.size(); ++u)
    v_b_at[fb.vertex_order[u]] = static_cast<int>(u);
  for (std::size_t u = 0; u < fb.facet_order.size(); ++u)
    f_b_at[fb.facet_order[u]] = static_cast<int>(u);
  for (std::size_t v = 0; v < a.vertices.size(); ++v)
    for (std::size_t f = 0; f < a.facets.size(); ++f) {
      int bv = v_b_at[fa.vertex_order[v]];
      int bf = f_b_at[fa.facet_order[f]];
      if (a.incidence[v][f] != b.incidence[bv][bf])
        throw std::runtime_error("same_type: certificate failed");
    }
  return true;
}

}  // namespace zonograph
