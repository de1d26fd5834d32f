#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace qtruth {

/// Dense complex matrix, the substrate for projectors, bases and linear
/// systems. Column vectors are n-by-1 matrices.
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Relative cutoffs for rank decisions and solvability tests.
struct Tolerance {
  double rank_rel = 1e-10;
  double residual_rel = 1e-9;
};

class DimensionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class InvariantError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool all_finite(const ComplexMatrix& m);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

/// Number of singular values >= rank_rel * sigma_max; 0 for the zero matrix.
Index rank(const ComplexMatrix& m, const Tolerance& tol = {});

/// Orthonormal columns spanning the column space of m; column count equals
/// rank(m, tol). Deterministic for fixed input and tolerance. The zero
/// matrix yields a matrix with zero columns.
ComplexMatrix orthonormal_column_basis(const ComplexMatrix& m,
                                       const Tolerance& tol = {});

/// Orthonormal columns spanning { x : m x ~ 0 }; column count equals
/// cols(m) - rank(m, tol).
ComplexMatrix null_space_basis(const ComplexMatrix& m,
                               const Tolerance& tol = {});

/// Indices of a maximal linearly independent set of columns of m, chosen by
/// column-pivoted orthogonalization, returned in pivot order.
std::vector<Index> independent_column_indices(const ComplexMatrix& m,
                                              const Tolerance& tol = {});

struct LeastSquaresSolution {
  ComplexMatrix x;           // minimizer of ||Ax - b||
  double residual_norm = 0;  // ||Ax - b||
  bool rank_deficient = false;
};

/// Minimum-norm least-squares solution of A x = b for a column vector b.
LeastSquaresSolution least_squares_solve(const ComplexMatrix& a,
                                         const ComplexMatrix& b);

}  // namespace qtruth
