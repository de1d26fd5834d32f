#include "qtruth/subspace.hpp"

namespace qtruth {

Projector::Projector(ComplexMatrix matrix, const Tolerance& tol)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols())
    throw DimensionError("Projector: matrix must be square");
  if (!all_finite(matrix_)) throw InvariantError("Projector: non-finite entries");
  const double band = 10.0 * tol.residual_rel;
  if ((matrix_ - matrix_.adjoint()).norm() > band)
    throw InvariantError("Projector: matrix is not Hermitian");
  if ((matrix_ * matrix_ - matrix_).norm() > band)
    throw InvariantError("Projector: matrix is not idempotent");
}

Projector Projector::zero(Index n) {
  return Projector(ComplexMatrix::Zero(n, n), unchecked_t{});
}

Projector Projector::identity(Index n) {
  return Projector(ComplexMatrix::Identity(n, n), unchecked_t{});
}

Projector Projector::complement() const {
  ComplexMatrix c = ComplexMatrix::Identity(matrix_.rows(), matrix_.cols()) - matrix_;
  return Projector(std::move(c), unchecked_t{});
}

Subspace Subspace::from_columns(const ComplexMatrix& columns,
                                const Tolerance& tol) {
  if (!all_finite(columns)) throw InvariantError("Subspace: non-finite entries");
  return Subspace(orthonormal_column_basis(columns, tol));
}

Subspace Subspace::zero(Index ambient) {
  return Subspace(ComplexMatrix(ambient, 0));
}

Subspace Subspace::full(Index ambient) {
  return Subspace(ComplexMatrix::Identity(ambient, ambient));
}

Subspace range_of(const Projector& p, const Tolerance& tol) {
  return Subspace::from_columns(p.matrix(), tol);
}

Subspace kernel_of(const Projector& p, const Tolerance& tol) {
  return Subspace::from_columns(p.complement().matrix(), tol);
}

Projector projector_of(const Subspace& s) {
  if (s.dim() == 0) return Projector::zero(s.dim_ambient());
  return Projector(s.basis() * s.basis().adjoint());
}

bool contains(const Subspace& s, const ComplexMatrix& v, const Tolerance& tol) {
  if (v.cols() != 1) throw DimensionError("contains: v must be a column");
  if (v.rows() != s.dim_ambient())
    throw DimensionError("contains: ambient dimension mismatch");
  const double norm = v.norm();
  if (norm == 0.0)
    throw InvariantError("contains: the zero vector is excluded");
  if (s.dim() == 0) return false;
  const ComplexMatrix proj = s.basis() * (s.basis().adjoint() * v);
  return (v - proj).norm() <= tol.residual_rel * norm;
}

Subspace join(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (a.dim_ambient() != b.dim_ambient())
    throw DimensionError("join: ambient dimension mismatch");
  ComplexMatrix stacked(a.dim_ambient(), a.dim() + b.dim());
  stacked << a.basis(), b.basis();
  return Subspace::from_columns(stacked, tol);
}

Subspace ortho_complement(const Subspace& a, const Tolerance& tol) {
  if (a.dim() == 0) return Subspace::full(a.dim_ambient());
  return Subspace::from_columns(null_space_basis(a.basis().adjoint(), tol), tol);
}

Subspace meet(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (a.dim_ambient() != b.dim_ambient())
    throw DimensionError("meet: ambient dimension mismatch");
  return ortho_complement(
      join(ortho_complement(a, tol), ortho_complement(b, tol), tol), tol);
}

bool equals(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (a.dim_ambient() != b.dim_ambient())
    throw DimensionError("equals: ambient dimension mismatch");
  const ComplexMatrix pa = projector_of(a).matrix();
  const ComplexMatrix pb = projector_of(b).matrix();
  return (pa - pb).norm() <= 10.0 * tol.residual_rel;
}

}  // namespace qtruth
