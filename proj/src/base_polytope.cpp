#include "zonograph/base_polytope.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zonograph/linalg.hpp"
#include "zonograph/roots.hpp"

namespace zonograph {

namespace {

Rational row_dot(Mask s, const QVector& x) {
  Rational acc(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (mask_contains(s, static_cast<int>(i))) acc += x[i];
  return acc;
}

void require_zero_at_universe(const SetFunction& f, const char* who) {
  if (f.value(f.universe()) != 0)
    throw std::invalid_argument(std::string(who) + ": f(N) must be 0");
}

}  // namespace

QVector vertex_from_chain(const SetFunction& f, const Chain& chain) {
  const int n = f.n();
  if (static_cast<int>(chain.size()) != n)
    throw std::invalid_argument("vertex_from_chain: need n proper sets");
  Mask prev = 0;
  QVector x(n + 1, Rational(0));
  for (int i = 0; i < n; ++i) {
    Mask cur = chain[i];
    if (mask_card(cur) != i + 1 || (prev & cur) != prev || (cur & ~full_mask(n)))
      throw std::invalid_argument("vertex_from_chain: sets not nested");
    int added = mask_elements(cur & ~prev)[0];
    x[added] = f.value(cur) - f.value(prev);
    prev = cur;
  }
  int last = mask_elements(full_mask(n) & ~prev)[0];
  x[last] = f.value(full_mask(n)) - f.value(prev);
  return x;
}

QVector vertex_from_order(const SetFunction& f, const Order& o) {
  const int n = f.n();
  Chain chain;
  Mask acc = 0;
  for (int k = 0; k < n; ++k) {
    acc |= Mask{1} << o[k];
    chain.push_back(acc);
  }
  return vertex_from_chain(f, chain);
}

QVector vertex_from_order(const Graph& g, const Order& o) {
  const int n = g.n();
  if (static_cast<int>(o.size()) != n + 1)
    throw std::invalid_argument("vertex_from_order: order size mismatch");
  std::vector<int> pos(n + 1, -1);
  for (int k = 0; k <= n; ++k) {
    if (o[k] < 0 || o[k] > n || pos[o[k]] != -1)
      throw std::invalid_argument("vertex_from_order: not a permutation");
    pos[o[k]] = k;
  }
  QVector x(n + 1, Rational(0));
  for (const auto& e : g.edges()) {
    // the earlier endpoint collects +b, the later one -b
    if (pos[e.i] < pos[e.j]) {
      x[e.i] += e.b;
      x[e.j] -= e.b;
    } else {
      x[e.j] += e.b;
      x[e.i] -= e.b;
    }
  }
  return x;
}

std::vector<QVector> enumerate_vertices(const SetFunction& f) {
  require_zero_at_universe(f, "enumerate_vertices");
  if (auto w = submodularity_violation(f))
    throw std::invalid_argument(
        "enumerate_vertices: not submodular; violating pair S=" +
        std::to_string(w->s) + " T=" + std::to_string(w->t));

  const int n = f.n();
  Order o(n + 1);
  std::iota(o.begin(), o.end(), 0);
  std::vector<QVector> verts;
  do {
    verts.push_back(vertex_from_order(f, o));
  } while (std::next_permutation(o.begin(), o.end()));
  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

std::vector<Mask> tight_sets(const SetFunction& f, const QVector& x) {
  if (static_cast<int>(x.size()) != f.n() + 1)
    throw std::invalid_argument("tight_sets: point length mismatch");
  const Mask all = f.universe();
  if (row_dot(all, x) != 0)
    throw std::invalid_argument("tight_sets: point off the sum-zero hyperplane");
  std::vector<Mask> out;
  for (Mask s = 0; s <= all; ++s) {
    Rational lhs = row_dot(s, x);
    if (lhs > f.value(s))
      throw std::invalid_argument("tight_sets: point violates row S=" +
                                  std::to_string(s));
    if (lhs == f.value(s)) out.push_back(s);
  }
  return out;
}

bool is_vertex(const SetFunction& f, const QVector& x) {
  auto tight = tight_sets(f, x);
  const int n = f.n();
  // Breadth-first chain search through the tight family by cardinality.
  std::vector<std::vector<Mask>> by_card(n + 2);
  for (Mask s : tight) by_card[mask_card(s)].push_back(s);
  std::vector<Mask> reach = {0};
  if (by_card[0].empty()) return false;
  for (int k = 1; k <= n + 1; ++k) {
    std::vector<Mask> next;
    for (Mask t : by_card[k])
      for (Mask prev : reach)
        if ((prev & t) == prev) {
          next.push_back(t);
          break;
        }
    if (next.empty()) return false;
    reach = std::move(next);
  }
  return true;
}

std::vector<std::pair<Mask, Rational>> facet_rows(const Graph& g) {
  std::vector<std::pair<Mask, Rational>> rows;
  const Mask all = full_mask(g.n());
  for (Mask s = 1; s < all; ++s) {
    if (mask_contains(s, 0)) continue;  // canonical side only
    auto cut = cut_edges(g, s);
    if (cut.empty() || !is_minimal_cut(g, s)) continue;
    Rational bound(0);
    for (const auto& e : cut) bound += e.b;
    rows.emplace_back(s, std::move(bound));
  }
  return rows;
}

SupportValue support_value(const Graph& g, Mask s) {
  const int n = g.n();
  SupportValue out;
  out.alpha = Rational(0);
  out.face_center.assign(n + 1, Rational(0));
  for (const auto& e : g.edges()) {
    int pairing = (mask_contains(s, e.i) ? 1 : 0) - (mask_contains(s, e.j) ? 1 : 0);
    if (pairing == 0) continue;
    out.alpha += e.b;  // pairing^2 == 1
    // b <e_S, t> t with t = e_i - e_j
    out.face_center[e.i] += Rational(pairing) * e.b;
    out.face_center[e.j] -= Rational(pairing) * e.b;
  }
  return out;
}

std::vector<std::pair<Mask, Rational>> symmetric_hrep(const SetFunction& f) {
  std::vector<std::pair<Mask, Rational>> rows;
  for (Mask s = 1; s <= f.universe(); ++s) {
    if (mask_contains(s, 0)) continue;
    rows.emplace_back(s, f.value(s));
  }
  return rows;
}

std::vector<QVector> vertices_by_row_intersection(const SetFunction& f) {
  return vertices_by_row_intersection(f, symmetric_hrep(f));
}

std::vector<QVector> vertices_by_row_intersection(
    const SetFunction& f, const std::vector<std::pair<Mask, Rational>>& rows) {
  require_zero_at_universe(f, "vertices_by_row_intersection");
  if (!f.is_symmetric())
    throw std::invalid_argument(
        "vertices_by_row_intersection: needs a symmetric function");
  const int n = f.n();
  const auto feasibility_rows = symmetric_hrep(f);

  // One-sided candidates: <e_S, x> = +bound and = -bound per row.
  struct Side {
    Mask s;
    Rational rhs;
  };
  std::vector<Side> sides;
  for (const auto& [s, bound] : rows) {
    sides.push_back({s, bound});
    sides.push_back({s, -bound});
  }

  std::vector<QVector> found;
  const int m = static_cast<int>(sides.size());
  if (n > 0 && m < n) return found;

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto advance = [&]() {
    int k = n - 1;
    while (k >= 0 && idx[k] == m - n + k) --k;
    if (k < 0) return false;
    ++idx[k];
    for (int p = k + 1; p < n; ++p) idx[p] = idx[p - 1] + 1;
    return true;
  };

  do {
    QMatrix a;
    QVector rhs;
    for (int k = 0; k < n; ++k) {
      QVector row(n + 1, Rational(0));
      for (int i = 0; i <= n; ++i)
        if (mask_contains(sides[idx[k]].s, i)) row[i] = 1;
      a.push_back(std::move(row));
      rhs.push_back(sides[idx[k]].rhs);
    }
    a.push_back(QVector(n + 1, Rational(1)));  // sum-zero hyperplane
    rhs.push_back(Rational(0));

    auto x = solve_unique(std::move(a), std::move(rhs));
    if (!x) continue;
    bool ok = true;
    for (const auto& [s, bound] : feasibility_rows) {
      Rational val = row_dot(s, *x);
      if (val > bound || val < -bound) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(std::move(*x));
  } while (n > 0 && advance());

  std::sort(found.begin(), found.end(), lex_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

Polytope build_base_polytope(const Graph& g) {
  auto f = cut_function(g);
  auto verts = enumerate_vertices(f);
  std::vector<FacetRow> expanded;
  for (const auto& [s, bound] : facet_rows(g)) {
    expanded.push_back({s, bound});
    expanded.push_back({mask_complement(s, g.n()), bound});
  }
  return make_polytope(g.n(), std::move(verts), std::move(expanded));
}

}  // namespace zonograph
