#include "qtruth/clinalg.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

namespace qtruth {

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  return m.adjoint();
}

namespace {

Index rank_from_singular_values(const Eigen::VectorXd& sv, double rank_rel) {
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double cutoff = rank_rel * sv(0);
  Index r = 0;
  while (r < sv.size() && sv(r) >= cutoff) ++r;
  return r;
}

}  // namespace

Index rank(const ComplexMatrix& m, const Tolerance& tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return rank_from_singular_values(svd.singularValues(), tol.rank_rel);
}

ComplexMatrix orthonormal_column_basis(const ComplexMatrix& m,
                                       const Tolerance& tol) {
  const Index r = rank(m, tol);
  if (r == 0) return ComplexMatrix(m.rows(), 0);
  // Column-pivoted QR realizes "remove dependent columns"; the SVD rank
  // decides how many columns survive.
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m.rows(), r);
  return q;
}

ComplexMatrix null_space_basis(const ComplexMatrix& m, const Tolerance& tol) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const Index r = rank_from_singular_values(svd.singularValues(), tol.rank_rel);
  return svd.matrixV().rightCols(m.cols() - r);
}

std::vector<Index> independent_column_indices(const ComplexMatrix& m,
                                              const Tolerance& tol) {
  const Index r = rank(m, tol);
  std::vector<Index> idx;
  if (r == 0) return idx;
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(m);
  const auto& perm = qr.colsPermutation().indices();
  idx.reserve(static_cast<std::size_t>(r));
  for (Index i = 0; i < r; ++i) idx.push_back(perm(i));
  return idx;
}

LeastSquaresSolution least_squares_solve(const ComplexMatrix& a,
                                         const ComplexMatrix& b) {
  if (b.cols() != 1) throw DimensionError("least_squares_solve: b must be a column");
  if (a.rows() != b.rows())
    throw DimensionError("least_squares_solve: row counts of A and b differ");
  LeastSquaresSolution out;
  if (a.cols() == 0) {
    out.x = ComplexMatrix(0, 1);
    out.residual_norm = b.norm();
    out.rank_deficient = false;
    return out;
  }
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(a);
  out.x = cod.solve(b);
  out.residual_norm = (a * out.x - b).norm();
  out.rank_deficient = cod.rank() < a.cols();
  return out;
}

}  // namespace qtruth
