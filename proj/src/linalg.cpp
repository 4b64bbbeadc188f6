#include "zonograph/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace zonograph {

namespace {

// In-place row echelon; returns pivot columns. Plain rational elimination:
// exact, and fast enough at this scale.
std::vector<int> echelon(QMatrix& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int matrix_rank(QMatrix a) { return static_cast<int>(echelon(a).size()); }

Rational determinant(QMatrix a) {
  const int m = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("determinant: matrix not square");
  Rational det(1);
  for (int c = 0; c < m; ++c) {
    int p = -1;
    for (int i = c; i < m; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) return Rational(0);
    if (p != c) { std::swap(a[p], a[c]); det = -det; }
    det *= a[c][c];
    for (int i = c + 1; i < m; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (int k = c; k < m; ++k) a[i][k] -= f * a[c][k];
    }
  }
  return det;
}

std::optional<QVector> solve_unique(QMatrix a, QVector rhs) {
  const int rows = static_cast<int>(a.size());
  if (rows != static_cast<int>(rhs.size()))
    throw std::invalid_argument("solve_unique: size mismatch");
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < rows; ++i) a[i].push_back(rhs[i]);

  auto pivots = echelon(a);
  const int r = static_cast<int>(pivots.size());
  // Inconsistent if a pivot lands in the rhs column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  for (int i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  if (r < cols) return std::nullopt;  // underdetermined

  QVector x(cols, Rational(0));
  for (int i = r - 1; i >= 0; --i) {
    int c = pivots[i];
    Rational acc = a[i][cols];
    for (int k = c + 1; k < cols; ++k) acc -= a[i][k] * x[k];
    x[c] = acc / a[i][c];
  }
  return x;
}

int affine_rank(const std::vector<QVector>& points) {
  if (points.empty()) return -1;
  QMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    QVector d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return matrix_rank(std::move(diffs));
}

QMatrix row_space_basis(QMatrix a) {
  auto pivots = echelon(a);
  const int r = static_cast<int>(pivots.size());
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  // Back-substitute to reduced form with unit pivots.
  for (int i = r - 1; i >= 0; --i) {
    int c = pivots[i];
    Rational inv = 1 / a[i][c];
    for (int k = c; k < cols; ++k) a[i][k] *= inv;
    for (int up = 0; up < i; ++up) {
      if (a[up][c] == 0) continue;
      Rational f = a[up][c];
      for (int k = c; k < cols; ++k) a[up][k] -= f * a[i][k];
    }
  }
  a.resize(r);
  return a;
}

QMatrix gram_of_rows(const std::vector<QVector>& rows) {
  const int m = static_cast<int>(rows.size());
  QMatrix g(m, QVector(m, Rational(0)));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < rows[i].size(); ++k) s += rows[i][k] * rows[j][k];
      g[i][j] = s;
      g[j][i] = s;
    }
  return g;
}

std::vector<std::vector<BigInt>> integer_lattice_basis(
    std::vector<std::vector<BigInt>> rows) {
  std::erase_if(rows, [](const std::vector<BigInt>& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
  });
  if (rows.empty()) return rows;
  const int cols = static_cast<int>(rows[0].size());
  const int m = static_cast<int>(rows.size());
  int r = 0;
  for (int c = 0; c < cols && r < m; ++c) {
    // Euclid on the column until a single nonzero entry remains below r.
    while (true) {
      int best = -1;
      for (int i = r; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        if (best < 0 || cmp(abs(rows[i][c]), abs(rows[best][c])) < 0) best = i;
      }
      if (best < 0) break;
      std::swap(rows[r], rows[best]);
      bool others = false;
      for (int i = r + 1; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        BigInt q = rows[i][c] / rows[r][c];  // truncated division is fine here
        if (q != 0)
          for (int k = 0; k < cols; ++k) rows[i][k] -= q * rows[r][k];
        if (rows[i][c] != 0) others = true;
      }
      if (!others) { ++r; break; }
    }
  }
  rows.resize(r);
  return rows;
}

namespace {

// Exact phase-1 simplex with Bland's rule. Minimizes the sum of artificial
// variables for {a*x = b, x >= 0}; feasible iff the optimum is zero.
bool phase1_feasible(QMatrix a, QVector b) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return true;
  const int k = static_cast<int>(a[0].size());
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }

  const int total = k + m;  // x columns then artificials
  QMatrix t(m, QVector(total + 1, Rational(0)));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) t[i][j] = a[i][j];
    t[i][k + i] = 1;
    t[i][total] = b[i];
    basis[i] = k + i;
  }

  // Reduced costs for min sum(artificials); artificial columns start at 0.
  QVector red(total + 1, Rational(0));
  for (int j = 0; j <= total; ++j) {
    Rational s(0);
    for (int i = 0; i < m; ++i)
      if (basis[i] >= k) s += t[i][j];
    red[j] = (j < k ? Rational(0) : Rational(j == total ? 0 : 1)) - s;
  }
  Rational obj(0);
  for (int i = 0; i < m; ++i) obj += b[i];

  while (true) {
    int enter = -1;
    for (int j = 0; j < total; ++j)
      if (red[j] < 0) { enter = j; break; }  // Bland: smallest index
    if (enter < 0) break;

    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][total] / t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded: cannot happen in phase 1

    Rational piv = t[leave][enter];
    for (int j = 0; j <= total; ++j) t[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (int j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = red[enter];
    if (f != 0)
      for (int j = 0; j <= total; ++j) red[j] -= f * t[leave][j];
    basis[leave] = enter;
    obj = Rational(0);
    for (int i = 0; i < m; ++i)
      if (basis[i] >= k) obj += t[i][total];
  }
  return obj == 0;
}

}  // namespace

bool nonnegative_solution_exists(const QMatrix& a, const QVector& rhs) {
  return phase1_feasible(a, rhs);
}

bool strict_cone_feasible(const std::vector<QVector>& rows) {
  if (rows.empty()) return true;
  const int m = static_cast<int>(rows.size());
  const int d = static_cast<int>(rows[0].size());
  // <row, y> >= 1 with free y: split y = u - v and add slacks.
  QMatrix a(m, QVector(2 * d + m, Rational(0)));
  QVector b(m, Rational(1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) {
      a[i][j] = rows[i][j];
      a[i][d + j] = -rows[i][j];
    }
    a[i][2 * d + i] = -1;
  }
  return phase1_feasible(std::move(a), std::move(b));
}

bool in_convex_hull(const QVector& x, const std::vector<QVector>& points) {
  if (points.empty()) return false;
  const int d = static_cast<int>(x.size());
  const int np = static_cast<int>(points.size());
  QMatrix a(d + 1, QVector(np, Rational(0)));
  QVector b(d + 1, Rational(0));
  for (int j = 0; j < np; ++j) {
    for (int i = 0; i < d; ++i) a[i][j] = points[j][i];
    a[d][j] = 1;
  }
  for (int i = 0; i < d; ++i) b[i] = x[i];
  b[d] = 1;
  return phase1_feasible(std::move(a), std::move(b));
}

std::vector<QVector> extreme_points(std::vector<QVector> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<QVector> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<QVector> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (!in_convex_hull(points[i], others)) out.push_back(points[i]);
  }
  return out;
}

}  // namespace zonograph
