#include "zonograph/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "zonograph/linalg.hpp"

namespace zonograph {

IntVector root_vector(int i, int j, int n) {
  if (!(0 <= i && i < j && j <= n))
    throw std::invalid_argument("root_vector: need 0 <= i < j <= n");
  IntVector t(n + 1, 0);
  t[i] = 1;
  t[j] = -1;
  return t;
}

bool is_root(const IntVector& t) { return edge_of_root(t).has_value(); }

std::optional<std::pair<int, int>> edge_of_root(const IntVector& t) {
  int plus = -1, minus = -1;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] == 0) continue;
    if (t[k] == 1 && plus < 0) plus = static_cast<int>(k);
    else if (t[k] == -1 && minus < 0) minus = static_cast<int>(k);
    else return std::nullopt;
  }
  if (plus < 0 || minus < 0) return std::nullopt;
  return std::pair(std::min(plus, minus), std::max(plus, minus));
}

IntVector cut_vector(Mask s, int n) {
  IntVector e(n + 1, 0);
  for (int i = 0; i <= n; ++i)
    if (mask_contains(s, i)) e[i] = 1;
  return e;
}

long long dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  long long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    s += static_cast<long long>(a[k]) * b[k];
  return s;
}

int edge_cut_indicator(int i, int j, Mask s) {
  return mask_contains(s, i) != mask_contains(s, j) ? 1 : 0;
}

std::vector<IntVector> roots_of_graph(const Graph& g) {
  std::vector<IntVector> x;
  x.reserve(g.edges().size());
  for (const auto& e : g.edges()) x.push_back(root_vector(e.i, e.j, g.n()));
  return x;
}

namespace {

QMatrix to_rational_rows(const std::vector<IntVector>& vectors) {
  QMatrix rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    QVector row(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) row[k] = Rational(v[k]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int span_dim(const std::vector<IntVector>& vectors) {
  return matrix_rank(to_rational_rows(vectors));
}

bool is_asymmetric(const std::vector<IntVector>& vectors) {
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      // parallel iff a*b_k == b*a_k componentwise cross-ratios vanish
      const auto& a = vectors[i];
      const auto& b = vectors[j];
      if (a.size() != b.size()) throw std::invalid_argument("mixed lengths");
      bool parallel = true;
      for (std::size_t p = 0; p < a.size() && parallel; ++p)
        for (std::size_t q = p + 1; q < a.size() && parallel; ++q)
          if (static_cast<long long>(a[p]) * b[q] !=
              static_cast<long long>(a[q]) * b[p])
            parallel = false;
      if (parallel) return false;
    }
  return true;
}

bool is_unimodular(const std::vector<IntVector>& vectors) {
  return !unimodularity_violation(vectors).has_value();
}

std::optional<UnimodularityWitness> unimodularity_violation(
    const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return std::nullopt;
  const std::size_t len = vectors[0].size();
  for (const auto& v : vectors)
    if (v.size() != len) throw std::invalid_argument("mixed lengths");

  QMatrix rows = to_rational_rows(vectors);
  const int m = static_cast<int>(rows.size());
  const int r = matrix_rank(rows);
  if (r == 0) return std::nullopt;

  // Walk all r-subsets; each independent one is a basic subset and every
  // vector must solve to integer coordinates in it.
  std::vector<int> idx(r);
  for (int k = 0; k < r; ++k) idx[k] = k;
  while (true) {
    QMatrix cols(len, QVector(r));
    for (int k = 0; k < r; ++k)
      for (std::size_t p = 0; p < len; ++p) cols[p][k] = rows[idx[k]][p];
    if (matrix_rank(cols) == r) {
      for (int v = 0; v < m; ++v) {
        QVector rhs(len);
        for (std::size_t p = 0; p < len; ++p) rhs[p] = rows[v][p];
        auto coords = solve_unique(cols, rhs);
        bool integral = coords.has_value();
        if (coords)
          for (const auto& c : *coords)
            if (c.get_den() != 1) integral = false;
        if (!integral) return UnimodularityWitness{idx, v};
      }
    }
    // next combination
    int k = r - 1;
    while (k >= 0 && idx[k] == m - r + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int p = k + 1; p < r; ++p) idx[p] = idx[p - 1] + 1;
  }
  return std::nullopt;
}

std::vector<IntVector> subchain_incidence_vectors(int n) {
  if (n < 1) throw std::invalid_argument("subchain vectors: n must be >= 1");
  std::vector<IntVector> out;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo; hi <= n; ++hi) {
      IntVector e(n + 1, 0);
      for (int k = lo; k <= hi; ++k) e[k] = 1;
      out.push_back(std::move(e));
    }
  return out;
}

}  // namespace zonograph
