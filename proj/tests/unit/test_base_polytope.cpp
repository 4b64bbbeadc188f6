#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "zonograph/base_polytope.hpp"
#include "zonograph/json_io.hpp"
#include "zonograph/linalg.hpp"

using namespace zonograph;
using testutil::q;
using testutil::qvec;

TEST_CASE("vertex from chain") {
  auto f = cut_function(complete_graph(2, q(1)));
  CHECK(vertex_from_chain(f, {0b001, 0b011}) == qvec({2, 0, -2}));

  CHECK(vertex_from_chain(SetFunction(2), {0b001, 0b011}) == qvec({0, 0, 0}));

  auto g = complete_graph(2, std::vector<Rational>{q(1), q(2), q(3)});
  CHECK(vertex_from_chain(cut_function(g), {0b001, 0b011}) == qvec({3, 2, -5}));

  CHECK_THROWS_AS(vertex_from_chain(f, {0b011, 0b001}), std::invalid_argument);
  CHECK_THROWS_AS(vertex_from_chain(f, {0b001, 0b110}), std::invalid_argument);
}

TEST_CASE("vertex from order") {
  Graph single(2, {{0, 1, q(1)}});
  CHECK(vertex_from_order(single, {0, 1, 2}) == qvec({1, -1, 0}));
  CHECK(vertex_from_order(single, {1, 0, 2}) == qvec({-1, 1, 0}));

  auto k3 = complete_graph(2, q(1));
  CHECK(vertex_from_order(k3, {0, 1, 2}) == qvec({2, 0, -2}));

  // agreement with the chain route on every order
  auto f = cut_function(k3);
  Order o = {0, 1, 2};
  std::sort(o.begin(), o.end());
  do {
    CHECK(vertex_from_order(k3, o) == vertex_from_order(f, o));
  } while (std::next_permutation(o.begin(), o.end()));

  CHECK_THROWS_AS(vertex_from_order(k3, {0, 0, 2}), std::invalid_argument);
}

TEST_CASE("vertex enumeration") {
  auto seg = enumerate_vertices(edge_indicator_function(2, 0, 1));
  REQUIRE(seg.size() == 2);
  CHECK(seg[0] == qvec({-1, 1, 0}));
  CHECK(seg[1] == qvec({1, -1, 0}));

  CHECK(enumerate_vertices(cut_function(complete_graph(3, q(1)))).size() == 24);

  auto zero = enumerate_vertices(SetFunction(2));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == qvec({0, 0, 0}));

  SetFunction bad(2);
  for (Mask s = 1; s <= full_mask(2); ++s)
    bad.set_value(s, q(mask_card(s) * mask_card(s)));
  bad.set_value(full_mask(2), q(0));
  CHECK_THROWS_AS(enumerate_vertices(bad), std::invalid_argument);
}

TEST_CASE("tight sets and vertex recognition") {
  auto f = cut_function(complete_graph(2, q(1)));

  auto tight = tight_sets(f, qvec({2, 0, -2}));
  CHECK(tight == std::vector<Mask>{0b000, 0b001, 0b011, 0b111});
  CHECK(is_vertex(f, qvec({2, 0, -2})));

  auto center = tight_sets(f, qvec({0, 0, 0}));
  CHECK(center == std::vector<Mask>{0b000, 0b111});
  CHECK_FALSE(is_vertex(f, qvec({0, 0, 0})));

  CHECK_THROWS_AS(tight_sets(f, qvec({3, 0, -3})), std::invalid_argument);
  CHECK_THROWS_AS(tight_sets(f, qvec({1, 1, 1})), std::invalid_argument);

  for (const auto& v : enumerate_vertices(f)) CHECK(is_vertex(f, v));
}

TEST_CASE("tight families are lattices at boundary points") {
  std::mt19937_64 rng(23);
  int tested = 0;
  while (tested < 60) {
    int n = 1 + static_cast<int>(rng() % 4);
    auto g = testutil::random_connected_graph(n, rng);
    auto f = cut_function(g);
    auto p = build_base_polytope(g);
    if (p.facets.empty()) continue;
    // random rational convex combination of a facet's vertices
    int fid = static_cast<int>(rng() % p.facets.size());
    auto ids = p.facet_vertices(fid);
    if (ids.empty()) continue;
    QVector x(n + 1, Rational(0));
    Rational total(0);
    std::vector<Rational> lams;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      Rational lam(1 + static_cast<long>(rng() % 5));
      lams.push_back(lam);
      total += lam;
    }
    for (std::size_t k = 0; k < ids.size(); ++k)
      for (int c = 0; c <= n; ++c)
        x[c] += lams[k] / total * p.vertices[ids[k]][c];

    auto tight = tight_sets(f, x);
    std::set<Mask> fam(tight.begin(), tight.end());
    for (Mask s : tight)
      for (Mask t : tight) {
        CHECK(fam.count(s & t) == 1);
        CHECK(fam.count(s | t) == 1);
      }
    ++tested;
  }
}

TEST_CASE("facet rows are the minimal-cut canonical sets") {
  auto rows_c4 = facet_rows(circuit_graph(3, q(1)));
  CHECK(rows_c4.size() == 6);
  for (const auto& [s, bound] : rows_c4) {
    CHECK_FALSE(mask_contains(s, 0));
    CHECK(bound == q(2));
  }

  auto rows_k4 = facet_rows(complete_graph(3, q(1)));
  CHECK(rows_k4.size() == 7);

  auto rows_star = facet_rows(star_graph(2, q(1)));
  REQUIRE(rows_star.size() == 2);
  CHECK(rows_star[0].first == 0b010);
  CHECK(rows_star[1].first == 0b100);
}

TEST_CASE("support values") {
  auto k3 = complete_graph(2, q(1));
  auto sv = support_value(k3, 0b010);
  CHECK(sv.alpha == q(2));
  CHECK(sv.face_center == qvec({-1, 2, -1}));

  // cut inside one component: zero support
  Graph disjoint(3, {{0, 1, q(1)}});
  auto sv2 = support_value(disjoint, 0b1000);
  CHECK(sv2.alpha == 0);
  CHECK(sv2.face_center == qvec({0, 0, 0, 0}));

  // alpha equals the vertex maximum of <e_S, .>
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    int n = 1 + static_cast<int>(rng() % 3);
    auto g = testutil::random_graph(n, rng);
    auto verts = enumerate_vertices(cut_function(g));
    for (Mask s = 1; s < full_mask(n); ++s) {
      Rational best(0);
      bool first = true;
      for (const auto& v : verts) {
        Rational val(0);
        for (int c = 0; c <= n; ++c)
          if (mask_contains(s, c)) val += v[c];
        if (first || val > best) best = val;
        first = false;
      }
      auto got = support_value(g, s);
      CHECK(got.alpha == best);
      // the face center lies on the supporting hyperplane
      Rational center_val(0);
      for (int c = 0; c <= n; ++c)
        if (mask_contains(s, c)) center_val += got.face_center[c];
      CHECK(center_val == got.alpha);
    }
  }
}

TEST_CASE("symmetric hrep matches the one-sided system") {
  auto k3 = complete_graph(2, q(1));
  auto f = cut_function(k3);
  auto rows = symmetric_hrep(f);
  CHECK(rows.size() == 3);  // {1}, {2}, {1,2}

  // same vertex set through the oracle restricted to those rows
  auto oracle = vertices_by_row_intersection(f, rows);
  CHECK(oracle == enumerate_vertices(f));

  // star box rows: -beta(i) <= x_i <= beta(i)
  auto star = star_graph(3, q(1));
  auto fs = cut_function(star);
  auto srows = symmetric_hrep(fs);
  auto sverts = vertices_by_row_intersection(fs, srows);
  CHECK(sverts == enumerate_vertices(fs));

  // the zero function pins the origin
  auto zverts = vertices_by_row_intersection(SetFunction(2));
  REQUIRE(zverts.size() == 1);
  CHECK(zverts[0] == qvec({0, 0, 0}));
}

TEST_CASE("row intersection oracle agrees with order enumeration") {
  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 12; ++rep) {
    int n = 1 + static_cast<int>(rng() % 3);
    auto g = testutil::random_graph(n, rng);
    auto f = cut_function(g);
    CHECK(vertices_by_row_intersection(f) == enumerate_vertices(f));
  }
}

TEST_CASE("row intersection oracle at n = 4") {
  std::mt19937_64 rng(38);
  auto g = testutil::random_connected_graph(4, rng);
  auto f = cut_function(g);
  CHECK(vertices_by_row_intersection(f) == enumerate_vertices(f));
}

TEST_CASE("minkowski additivity of vertex sets (n <= 3)") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 6; ++rep) {
    int n = 1 + static_cast<int>(rng() % 3);
    auto g1 = testutil::random_graph(n, rng);
    auto g2 = testutil::random_graph(n, rng);
    auto v1 = enumerate_vertices(cut_function(g1));
    auto v2 = enumerate_vertices(cut_function(g2));
    std::vector<QVector> sums;
    for (const auto& a : v1)
      for (const auto& b : v2) {
        QVector s(a.size());
        for (std::size_t c = 0; c < a.size(); ++c) s[c] = a[c] + b[c];
        sums.push_back(std::move(s));
      }
    auto hull = extreme_points(std::move(sums));
    auto direct = enumerate_vertices(add(cut_function(g1), cut_function(g2)));
    CHECK(hull == direct);
  }
}

TEST_CASE("built polytope validates and serializes") {
  auto g = complete_graph(2, std::vector<Rational>{q(1), q(2), q(3)});
  auto p = build_base_polytope(g);
  CHECK(p.dim == 2);
  CHECK(p.vertices.size() == 6);
  CHECK(p.facets.size() == 6);
  CHECK_FALSE(validate_polytope(p).has_value());

  auto j = polytope_to_json(p);
  auto back = polytope_from_json(j);
  CHECK(polytope_to_json(back) == j);
  CHECK(back.vertices == p.vertices);
  CHECK(back.incidence == p.incidence);

  // single vertex polytope from the empty graph
  auto empty = build_base_polytope(Graph(2, {}));
  CHECK(empty.dim == 0);
  REQUIRE(empty.vertices.size() == 1);
  CHECK(empty.vertices[0] == qvec({0, 0, 0}));
  CHECK(empty.facets.empty());
}

TEST_CASE("opposite facet rows are tight on antipodal vertex sets") {
  auto p = build_base_polytope(circuit_graph(3, q(1)));
  for (std::size_t a = 0; a < p.facets.size(); ++a)
    for (std::size_t b = 0; b < p.facets.size(); ++b) {
      if (p.facets[a].subset != mask_complement(p.facets[b].subset, p.n)) continue;
      auto va = p.facet_vertices(static_cast<int>(a));
      auto vb = p.facet_vertices(static_cast<int>(b));
      REQUIRE(va.size() == vb.size());
      for (int id : va) {
        QVector neg(p.vertices[id].size());
        for (std::size_t c = 0; c < neg.size(); ++c) neg[c] = -p.vertices[id][c];
        bool found = false;
        for (int other : vb)
          if (p.vertices[other] == neg) found = true;
        CHECK(found);
      }
    }
}
