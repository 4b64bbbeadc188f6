#include "zonograph/zonotope.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "zonograph/base_polytope.hpp"
#include "zonograph/face_lattice.hpp"
#include "zonograph/linalg.hpp"

namespace zonograph {

std::vector<SegmentGenerator> generators_of_graph(const Graph& g) {
  std::vector<SegmentGenerator> gens;
  gens.reserve(g.edges().size());
  for (const auto& e : g.edges())
    gens.push_back({root_vector(e.i, e.j, g.n()), e.b});
  return gens;
}

QMatrix gram_matrix(const std::vector<SegmentGenerator>& gens, int n) {
  QMatrix d(n + 1, QVector(n + 1, Rational(0)));
  for (const auto& gen : gens) {
    if (static_cast<int>(gen.direction.size()) != n + 1)
      throw std::invalid_argument("gram_matrix: direction length mismatch");
    for (int r = 0; r <= n; ++r)
      for (int c = 0; c <= n; ++c)
        d[r][c] += gen.half_length * gen.direction[r] * gen.direction[c];
  }
  return d;
}

Rational quadratic_form(const QMatrix& d, const QVector& x) {
  Rational acc(0);
  for (std::size_t r = 0; r < d.size(); ++r)
    for (std::size_t c = 0; c < d.size(); ++c) acc += x[r] * d[r][c] * x[c];
  return acc;
}

namespace {

void validate_generators(const std::vector<SegmentGenerator>& gens, int n) {
  std::vector<IntVector> dirs;
  for (const auto& g : gens) {
    if (static_cast<int>(g.direction.size()) != n + 1)
      throw std::invalid_argument("zonotope: direction length mismatch");
    if (!is_root(g.direction))
      throw std::invalid_argument("zonotope: generator direction is not a root");
    if (g.half_length <= 0)
      throw std::invalid_argument("zonotope: generator length must be positive");
    dirs.push_back(g.direction);
  }
  if (!is_asymmetric(dirs))
    throw std::invalid_argument("zonotope: generators must be pairwise non-parallel");
  if (static_cast<int>(gens.size()) > kMaxGenerators)
    throw std::invalid_argument("zonotope: generator cap exceeded");
}

}  // namespace

std::vector<QVector> zonotope_vertices(const std::vector<SegmentGenerator>& gens,
                                       int n) {
  validate_generators(gens, n);
  const int m = static_cast<int>(gens.size());
  std::vector<QVector> verts;

  // Depth-first over sign vectors. A full assignment eps yields a vertex
  // iff some functional c has eps_t <t, c> > 0 for every t, and every
  // prefix of a realizable assignment is realizable, so infeasible
  // prefixes prune whole subtrees.
  std::vector<QVector> rows;
  std::vector<int> signs(m, 1);
  auto emit = [&]() {
    QVector x(n + 1, Rational(0));
    for (int k = 0; k < m; ++k)
      for (int c = 0; c <= n; ++c)
        x[c] += Rational(signs[k]) * gens[k].half_length * gens[k].direction[c];
    verts.push_back(std::move(x));
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (!strict_cone_feasible(rows)) return;
    if (k == m) {
      emit();
      return;
    }
    for (int sgn : {1, -1}) {
      signs[k] = sgn;
      QVector row(n + 1);
      for (int c = 0; c <= n; ++c) row[c] = Rational(sgn * gens[k].direction[c]);
      rows.push_back(std::move(row));
      self(self, k + 1);
      rows.pop_back();
    }
  };
  rec(rec, 0);

  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

VertexSetDiff equals_base_polytope(const Graph& g) {
  auto base = enumerate_vertices(cut_function(g));
  auto zono = zonotope_vertices(generators_of_graph(g), g.n());
  VertexSetDiff diff;
  std::set_difference(base.begin(), base.end(), zono.begin(), zono.end(),
                      std::back_inserter(diff.only_base), lex_less);
  std::set_difference(zono.begin(), zono.end(), base.begin(), base.end(),
                      std::back_inserter(diff.only_zonotope), lex_less);
  diff.equal = diff.only_base.empty() && diff.only_zonotope.empty();
  return diff;
}

QVector minimal_vector_map(const std::vector<SegmentGenerator>& gens, int n,
                           const IntVector& facet_vector) {
  if (static_cast<int>(facet_vector.size()) != n + 1)
    throw std::invalid_argument("minimal_vector_map: length mismatch");
  auto d = gram_matrix(gens, n);
  QVector q(n + 1, Rational(0));
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c) q[r] += d[r][c] * facet_vector[c];
  return q;
}

int nrd(const Graph& g) { return g.edge_count(); }

namespace {

QVector facet_center(const std::vector<SegmentGenerator>& gens, int n, Mask s) {
  QVector q(n + 1, Rational(0));
  for (const auto& gen : gens) {
    int pairing = 0;
    for (int c = 0; c <= n; ++c)
      if (mask_contains(s, c)) pairing += gen.direction[c];
    if (pairing == 0) continue;
    for (int c = 0; c <= n; ++c)
      q[c] += Rational(pairing) * gen.half_length * gen.direction[c];
  }
  return q;
}

bool vertex_set_symmetric_about(const std::vector<QVector>& pts,
                                const QVector& center) {
  std::vector<QVector> sorted = pts;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  for (const auto& v : pts) {
    QVector mirror(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) mirror[c] = 2 * center[c] - v[c];
    if (!std::binary_search(sorted.begin(), sorted.end(), mirror, lex_less))
      return false;
  }
  return true;
}

}  // namespace

TilingReport tiling_check(const Polytope& p,
                          const std::vector<SegmentGenerator>& gens) {
  TilingReport rep;
  rep.vol_squared = Rational(0);
  rep.lattice_gram_det = Rational(0);
  const int n = p.n;
  auto fail = [&](const std::string& why) {
    if (rep.witness.empty()) rep.witness = why;
  };

  // (a) central symmetry of the body and of every facet about its center.
  rep.central_symmetry =
      vertex_set_symmetric_about(p.vertices, QVector(n + 1, Rational(0)));
  if (!rep.central_symmetry) fail("body not centrally symmetric");
  rep.facet_symmetry = true;
  for (std::size_t f = 0; f < p.facets.size(); ++f) {
    std::vector<QVector> pts;
    for (int v : p.facet_vertices(static_cast<int>(f))) pts.push_back(p.vertices[v]);
    QVector center = facet_center(gens, n, p.facets[f].subset);
    if (!vertex_set_symmetric_about(pts, center)) {
      rep.facet_symmetry = false;
      fail("facet " + std::to_string(f) + " not symmetric about its center");
      break;
    }
  }

  // (b) belts close with length 4 or 6.
  rep.belts_ok = true;
  if (p.dim >= 2) {
    try {
      auto bs = belts(p);
      for (const auto& b : bs) {
        rep.belts.push_back({b.facet_ids, b.length()});
        if (b.length() != 4 && b.length() != 6) {
          rep.belts_ok = false;
          fail("belt of length " + std::to_string(b.length()));
        }
      }
    } catch (const std::exception& e) {
      rep.belts_ok = false;
      fail(std::string("belt walk failed: ") + e.what());
    }
  }

  // (c) volume identity. All basis Gram determinants agree (unimodular
  // generators), so the squared volume is rational:
  //   vol^2 = 4^r * gram_det * (sum over bases of the weight products)^2.
  const int r = span_dim([&] {
    std::vector<IntVector> dirs;
    for (const auto& g : gens) dirs.push_back(g.direction);
    return dirs;
  }());
  bool volume_ok = true;
  Rational base_gram(0);
  Rational products(0);
  if (r > 0) {
    const int m = static_cast<int>(gens.size());
    std::vector<int> idx(r);
    for (int k = 0; k < r; ++k) idx[k] = k;
    while (true) {
      std::vector<QVector> rows;
      Rational prod(1);
      for (int k = 0; k < r; ++k) {
        QVector row(n + 1);
        for (int c = 0; c <= n; ++c) row[c] = Rational(gens[idx[k]].direction[c]);
        rows.push_back(std::move(row));
        prod *= gens[idx[k]].half_length;
      }
      Rational det = determinant(gram_of_rows(rows));
      if (det != 0) {
        if (base_gram == 0) base_gram = det;
        else if (det != base_gram) {
          volume_ok = false;
          fail("basis Gram determinants differ: generators not unimodular");
        }
        products += prod;
      }
      int k = r - 1;
      while (k >= 0 && idx[k] == m - r + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int pq = k + 1; pq < r; ++pq) idx[pq] = idx[pq - 1] + 1;
    }
  }
  if (volume_ok) {
    Rational four_r(1);
    for (int k = 0; k < r; ++k) four_r *= 4;
    rep.vol_squared = r == 0 ? Rational(1) : four_r * base_gram * products * products;
  }

  // Translate lattice: integer combinations of the doubled facet centers.
  {
    std::vector<QVector> centers;
    for (const auto& row : p.facets) {
      QVector q = facet_center(gens, n, row.subset);
      for (auto& c : q) c *= 2;
      centers.push_back(std::move(q));
    }
    BigInt denom(1);
    for (const auto& q : centers)
      for (const auto& c : q) denom = lcm(denom, c.get_den());
    std::vector<std::vector<BigInt>> rows;
    for (const auto& q : centers) {
      std::vector<BigInt> row;
      for (const auto& c : q) row.push_back(c.get_num() * (denom / c.get_den()));
      rows.push_back(std::move(row));
    }
    auto basis = integer_lattice_basis(std::move(rows));
    if (static_cast<int>(basis.size()) != r) {
      fail("translate lattice rank " + std::to_string(basis.size()) +
           " does not match zonotope rank " + std::to_string(r));
      rep.volume_matches = false;
    } else {
      std::vector<QVector> qrows;
      for (const auto& row : basis) {
        QVector qr;
        for (const auto& c : row) qr.push_back(Rational(c));
        qrows.push_back(std::move(qr));
      }
      Rational det = determinant(gram_of_rows(qrows));
      Rational scale(1);
      for (int k = 0; k < 2 * r; ++k) scale *= denom;
      rep.lattice_gram_det = r == 0 ? Rational(1) : det / scale;
      rep.volume_matches = volume_ok && rep.vol_squared == rep.lattice_gram_det;
      if (!rep.volume_matches)
        fail("vol^2 " + rational_to_string(rep.vol_squared) +
             " != lattice Gram det " + rational_to_string(rep.lattice_gram_det));
    }
  }

  rep.tiles = rep.central_symmetry && rep.facet_symmetry && rep.belts_ok &&
              rep.volume_matches;
  return rep;
}

}  // namespace zonograph
