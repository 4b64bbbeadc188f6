#pragma once

#include <optional>
#include <vector>

#include "zonograph/rational.hpp"

namespace zonograph {

// Dense exact linear algebra over the rationals, sized for desk-scale
// instances (matrices of a few dozen rows at most).

int matrix_rank(QMatrix a);

/// Determinant of a square matrix.
Rational determinant(QMatrix a);

/// Unique solution of a*x = rhs (a may have more rows than columns).
/// nullopt when the system is inconsistent or underdetermined.
std::optional<QVector> solve_unique(QMatrix a, QVector rhs);

/// Dimension of the affine hull of a point set (-1 for the empty set).
int affine_rank(const std::vector<QVector>& points);

/// Reduced row echelon basis of the row space; canonical per subspace,
/// usable as a dictionary key for parallelism classes.
QMatrix row_space_basis(QMatrix a);

/// Gram matrix v_i . v_j of a list of vectors.
QMatrix gram_of_rows(const std::vector<QVector>& rows);

/// Basis of the lattice generated over the integers by the given rows
/// (integer row reduction; input rows need not be independent).
std::vector<std::vector<BigInt>> integer_lattice_basis(
    std::vector<std::vector<BigInt>> rows);

/// Feasibility of {a*x = rhs, x >= 0} via exact phase-1 simplex (Bland).
bool nonnegative_solution_exists(const QMatrix& a, const QVector& rhs);

/// True iff some y satisfies <row, y> >= 1 for every row, i.e. the rows
/// fit strictly inside an open halfspace.
bool strict_cone_feasible(const std::vector<QVector>& rows);

/// True iff x lies in the convex hull of the given points.
bool in_convex_hull(const QVector& x, const std::vector<QVector>& points);

/// Extreme points of a finite point set, sorted lexicographically.
std::vector<QVector> extreme_points(std::vector<QVector> points);

}  // namespace zonograph
