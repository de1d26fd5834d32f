#pragma once

#include "qtruth/clinalg.hpp"

namespace qtruth {

/// Hermitian idempotent matrix representing an experimental proposition.
class Projector {
 public:
  Projector(ComplexMatrix matrix, const Tolerance& tol = {});

  static Projector zero(Index n);
  static Projector identity(Index n);

  const ComplexMatrix& matrix() const { return matrix_; }
  Index dim_ambient() const { return matrix_.rows(); }

  /// I - P.
  Projector complement() const;

 private:
  struct unchecked_t {};
  Projector(ComplexMatrix matrix, unchecked_t) : matrix_(std::move(matrix)) {}
  ComplexMatrix matrix_;
};

/// Closed linear subspace of C^n held as an orthonormal column basis.
/// dim() == 0 is the zero subspace, dim() == ambient is the whole space.
class Subspace {
 public:
  /// Canonicalizes an arbitrary spanning set into an orthonormal basis.
  static Subspace from_columns(const ComplexMatrix& columns,
                               const Tolerance& tol = {});
  static Subspace zero(Index ambient);
  static Subspace full(Index ambient);

  const ComplexMatrix& basis() const { return basis_; }
  Index dim_ambient() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }

 private:
  Subspace(ComplexMatrix basis) : basis_(std::move(basis)) {}
  ComplexMatrix basis_;
};

Subspace range_of(const Projector& p, const Tolerance& tol = {});
Subspace kernel_of(const Projector& p, const Tolerance& tol = {});

/// B B^dagger for the orthonormal basis B.
Projector projector_of(const Subspace& s);

/// Membership of a nonzero vector; the zero vector is rejected.
bool contains(const Subspace& s, const ComplexMatrix& v,
              const Tolerance& tol = {});

/// Intersection, via complement-join-complement.
Subspace meet(const Subspace& a, const Subspace& b, const Tolerance& tol = {});

/// Closed span of the union.
Subspace join(const Subspace& a, const Subspace& b, const Tolerance& tol = {});

Subspace ortho_complement(const Subspace& a, const Tolerance& tol = {});

bool equals(const Subspace& a, const Subspace& b, const Tolerance& tol = {});

}  // namespace qtruth
