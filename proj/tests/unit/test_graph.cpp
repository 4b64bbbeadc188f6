#include <doctest.h>

#include "test_util.hpp"
#include "zonograph/graph.hpp"
#include "zonograph/json_io.hpp"

using namespace zonograph;
using testutil::q;

TEST_CASE("graph construction normalizes and validates") {
  Graph g(2, {{0, 1, q(1)}, {1, 2, q(0)}});
  CHECK(g.edge_count() == 1);  // zero-weight edge dropped
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.weight(1, 0) == q(1));

  CHECK_THROWS_AS(Graph(2, {{1, 1, q(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 3, q(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1, q(1)}, {0, 1, q(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1, q(-1)}}), std::invalid_argument);
}

TEST_CASE("cut edges") {
  auto k3 = complete_graph(2, q(1));
  auto cut = cut_edges(k3, 0b010);  // S = {1}
  REQUIRE(cut.size() == 2);
  CHECK(cut[0].i == 0);
  CHECK(cut[0].j == 1);
  CHECK(cut[1].i == 1);
  CHECK(cut[1].j == 2);

  CHECK(cut_edges(k3, 0).empty());
  CHECK(cut_edges(k3, full_mask(2)).empty());

  auto c4 = circuit_graph(3, q(1));
  CHECK(cut_edges(c4, 0b1010).size() == 4);  // S = {1,3} cuts everything
}

TEST_CASE("cut is symmetric under complement") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto g = testutil::random_graph(n, rng);
    for (Mask s = 0; s <= full_mask(n); ++s) {
      auto a = cut_edges(g, s);
      auto b = cut_edges(g, mask_complement(s, n));
      CHECK(a == b);
    }
  }
}

TEST_CASE("rank") {
  CHECK(graph_rank(complete_graph(3, q(1))) == 3);
  CHECK(graph_rank(Graph(2, {})) == 0);
  CHECK(graph_rank(Graph(3, {{0, 1, q(1)}, {2, 3, q(1)}})) == 2);
  CHECK(graph_rank(path_graph(4, q(1))) == 4);
}

TEST_CASE("minimal cuts") {
  auto c4 = circuit_graph(3, q(1));
  CHECK(is_minimal_cut(c4, 0b0010));        // S = {1}: rank 3 -> 2
  CHECK_FALSE(is_minimal_cut(c4, 0b1010));  // S = {1,3}: rank 3 -> 0
  CHECK(is_minimal_cut(complete_graph(2, q(1)), 0b010));
  CHECK_THROWS_AS(is_minimal_cut(c4, 0), std::invalid_argument);
  CHECK_THROWS_AS(is_minimal_cut(c4, full_mask(3)), std::invalid_argument);
}

TEST_CASE("tree edges induce singleton minimal cuts") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<Edge> tree_edges;
    for (int v = 1; v <= n; ++v)
      tree_edges.push_back(
          {static_cast<int>(rng() % v), v, testutil::random_weight(rng)});
    Graph tree(n, tree_edges);
    REQUIRE(is_spanning_tree(tree));
    for (const auto& e : tree.edges()) {
      // Deleting e splits the tree; the side without 0 cuts exactly {e}.
      std::vector<Edge> rest;
      for (const auto& o : tree.edges())
        if (!(o.i == e.i && o.j == e.j)) rest.push_back(o);
      Graph cutg(n, rest);
      Mask s = 0;
      for (Mask comp : components(cutg))
        if (!mask_contains(comp, 0) &&
            (comp & ((Mask{1} << e.i) | (Mask{1} << e.j))))
          s = comp;
      auto cut = cut_edges(tree, s);
      REQUIRE(cut.size() == 1);
      CHECK(cut[0] == e);
      CHECK(is_minimal_cut(tree, s));
    }
    // removing any tree edge reduces rank by exactly 1
    for (std::size_t k = 0; k < tree.edges().size(); ++k) {
      std::vector<Edge> rest;
      for (std::size_t m = 0; m < tree.edges().size(); ++m)
        if (m != k) rest.push_back(tree.edges()[m]);
      CHECK(graph_rank(Graph(n, rest)) == graph_rank(tree) - 1);
    }
  }
}

TEST_CASE("standard families") {
  auto k3 = complete_graph(2, q(1));
  CHECK(k3.edge_count() == 3);

  auto c4 = circuit_graph(3, q(1));
  REQUIRE(c4.edge_count() == 4);
  CHECK(c4.has_edge(0, 1));
  CHECK(c4.has_edge(1, 2));
  CHECK(c4.has_edge(2, 3));
  CHECK(c4.has_edge(0, 3));

  auto s3 = star_graph(3, q(1));
  REQUIRE(s3.edge_count() == 3);
  CHECK(s3.has_edge(0, 1));
  CHECK(s3.has_edge(0, 2));
  CHECK(s3.has_edge(0, 3));

  CHECK(path_graph(3, q(1)).edge_count() == 3);
  CHECK_THROWS_AS(complete_graph(2, std::vector<Rational>{q(1)}),
                  std::invalid_argument);
}

TEST_CASE("graph json roundtrip is exact") {
  Graph g(3, {{0, 1, q(2, 3)}, {1, 3, q(7)}, {0, 2, q(5, 4)}});
  auto j = graph_to_json(g);
  auto back = graph_from_json(j);
  CHECK(back.n() == g.n());
  CHECK(back.edges() == g.edges());
  CHECK(graph_to_json(back) == j);
  CHECK(j["edges"][0]["b"] == "2/3");
}
