#include "zonograph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zonograph {

bool operator==(const Edge& a, const Edge& b) {
  return a.i == b.i && a.j == b.j && a.b == b.b;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("graph: n out of range");
  for (auto& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i > n || e.j > n || e.i >= e.j)
      throw std::invalid_argument("graph: bad edge endpoints");
    if (e.b < 0) throw std::invalid_argument("graph: negative edge weight");
  }
  std::erase_if(edges, [](const Edge& e) { return e.b == 0; });
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  for (std::size_t k = 1; k < edges.size(); ++k)
    if (edges[k - 1].i == edges[k].i && edges[k - 1].j == edges[k].j)
      throw std::invalid_argument("graph: repeated edge");
  edges_ = std::move(edges);
}

bool Graph::has_edge(int i, int j) const { return weight(i, j) != 0; }

Rational Graph::weight(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : edges_)
    if (e.i == i && e.j == j) return e.b;
  return Rational(0);
}

std::vector<Edge> cut_edges(const Graph& g, Mask s) {
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (mask_contains(s, e.i) != mask_contains(s, e.j)) out.push_back(e);
  return out;
}

std::vector<Mask> components(const Graph& g) {
  const int v = g.vertex_count();
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) parent[find(e.i)] = find(e.j);

  std::vector<Mask> comp(v, 0);
  for (int i = 0; i < v; ++i) comp[find(i)] |= Mask{1} << i;
  std::vector<Mask> out;
  for (int i = 0; i < v; ++i)
    if (comp[i] != 0) out.push_back(comp[i]);
  return out;
}

int component_count(const Graph& g) {
  return static_cast<int>(components(g).size());
}

int graph_rank(const Graph& g) { return g.vertex_count() - component_count(g); }

bool is_minimal_cut(const Graph& g, Mask s) {
  if (s == 0 || s == full_mask(g.n()) || (s & ~full_mask(g.n())) != 0)
    throw std::invalid_argument("is_minimal_cut: S must be nonempty and proper");
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (mask_contains(s, e.i) == mask_contains(s, e.j)) kept.push_back(e);
  Graph rest(g.n(), std::move(kept));
  return graph_rank(rest) == graph_rank(g) - 1;
}

bool is_spanning_tree(const Graph& g) {
  return g.edge_count() == g.n() && component_count(g) == 1;
}

namespace {

Graph family(int n, const std::vector<std::pair<int, int>>& ends,
             const std::vector<Rational>& b) {
  if (b.size() != ends.size())
    throw std::invalid_argument("weight list length mismatch");
  std::vector<Edge> edges;
  edges.reserve(ends.size());
  for (std::size_t k = 0; k < ends.size(); ++k) {
    auto [i, j] = ends[k];
    if (i > j) std::swap(i, j);
    edges.push_back({i, j, b[k]});
  }
  return Graph(n, std::move(edges));
}

std::vector<std::pair<int, int>> complete_ends(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return e;
}

std::vector<std::pair<int, int>> circuit_ends(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n, 0);
  return e;
}

std::vector<std::pair<int, int>> path_ends(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

std::vector<std::pair<int, int>> star_ends(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
  return e;
}

Graph uniform(int n, const std::vector<std::pair<int, int>>& ends,
              const Rational& b) {
  return family(n, ends, std::vector<Rational>(ends.size(), b));
}

void require_positive_order(int n) {
  if (n < 1) throw std::invalid_argument("graph family: n must be >= 1");
}

}  // namespace

Graph complete_graph(int n, const Rational& b) {
  require_positive_order(n);
  return uniform(n, complete_ends(n), b);
}
Graph complete_graph(int n, const std::vector<Rational>& b) {
  require_positive_order(n);
  return family(n, complete_ends(n), b);
}
Graph circuit_graph(int n, const Rational& b) {
  // n = 1 would need a doubled edge; multigraphs are out.
  if (n < 2) throw std::invalid_argument("circuit: n must be >= 2");
  return uniform(n, circuit_ends(n), b);
}
Graph circuit_graph(int n, const std::vector<Rational>& b) {
  if (n < 2) throw std::invalid_argument("circuit: n must be >= 2");
  return family(n, circuit_ends(n), b);
}
Graph path_graph(int n, const Rational& b) {
  require_positive_order(n);
  return uniform(n, path_ends(n), b);
}
Graph path_graph(int n, const std::vector<Rational>& b) {
  require_positive_order(n);
  return family(n, path_ends(n), b);
}
Graph star_graph(int n, const Rational& b) {
  require_positive_order(n);
  return uniform(n, star_ends(n), b);
}
Graph star_graph(int n, const std::vector<Rational>& b) {
  require_positive_order(n);
  return family(n, star_ends(n), b);
}

}  // namespace zonograph
