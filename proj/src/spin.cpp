#include "qtruth/spin.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace qtruth {

SpinMatrices spin_matrices(double j) {
  const double two_j = 2.0 * j;
  if (j <= 0.0 || std::abs(two_j - std::round(two_j)) > 1e-12)
    throw InvariantError("spin_matrices: j must be a positive half-integer");
  const Index dim = static_cast<Index>(std::llround(two_j)) + 1;

  // Ladder construction: (S+)_{i,i+1} = sqrt(j(j+1) - m(m+1)) for
  // m = j-1, ..., -j down the superdiagonal.
  ComplexMatrix raise = ComplexMatrix::Zero(dim, dim);
  for (Index i = 0; i + 1 < dim; ++i) {
    const double m = j - static_cast<double>(i + 1);
    raise(i, i + 1) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const ComplexMatrix lower = raise.adjoint();

  SpinMatrices s;
  s.sx = 0.5 * (raise + lower);
  s.sy = Complex(0, -0.5) * (raise - lower);
  s.sz = ComplexMatrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) s.sz(i, i) = j - static_cast<double>(i);
  return s;
}

Projector eigenprojector(const ComplexMatrix& m, double lambda,
                         const Tolerance& tol) {
  if (m.rows() != m.cols())
    throw DimensionError("eigenprojector: matrix must be square");
  if ((m - m.adjoint()).norm() > 10.0 * tol.residual_rel * std::max(1.0, m.norm()))
    throw InvariantError("eigenprojector: matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  const auto& vals = es.eigenvalues();
  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  const double band = std::sqrt(tol.residual_rel) * scale;

  ComplexMatrix p = ComplexMatrix::Zero(m.rows(), m.cols());
  Index mult = 0;
  for (Index i = 0; i < vals.size(); ++i) {
    if (std::abs(vals(i) - lambda) <= band) {
      const ComplexMatrix v = es.eigenvectors().col(i);
      p += v * v.adjoint();
      ++mult;
    }
  }
  if (mult == 0)
    throw InvariantError("eigenprojector: lambda is not an eigenvalue");
  return Projector(std::move(p), tol);
}

SpinFixtureSet spin32_fixtures() {
  const double s3 = std::sqrt(3.0);
  const Complex i(0, 1);

  ComplexMatrix p(4, 4);
  p << 1.0, -i * s3, -s3, i,
       i * s3, 3.0, -3.0 * i, -s3,
       -s3, 3.0 * i, 3.0, -i * s3,
       -i, -s3, i * s3, 1.0;
  p /= 8.0;

  const double c = 1.0 / (2.0 * std::sqrt(2.0));
  ComplexMatrix y32(4, 1), y12(4, 1), x32(4, 1);
  y32 << i * c, -s3 * c, -i * s3 * c, c;
  y12 << -i * s3 * c, c, -i * c, s3 * c;
  x32 << c, s3 * c, s3 * c, c;

  return SpinFixtureSet{Projector(std::move(p)),
                        StateVector(std::move(y32), "ket_Y32"),
                        StateVector(std::move(y12), "ket_Y12"),
                        StateVector(std::move(x32), "ket_X32")};
}

}  // namespace qtruth
