#pragma once

#include <cstdint>
#include <random>

#include "qtruth/clinalg.hpp"

namespace qtruth::testing {

// Test-local random matrices, independent of the sampling module so the
// property tests do not lean on the code under test.
inline ComplexMatrix random_matrix(Index rows, Index cols, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  auto unit = [&] { return (static_cast<double>(eng() >> 11)) * 0x1p-53 - 0.5; };
  ComplexMatrix m(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = Complex(unit(), unit());
  return m;
}

inline ComplexMatrix random_unit_vector(Index n, std::uint64_t seed) {
  ComplexMatrix v = random_matrix(n, 1, seed);
  while (v.norm() < 1e-6) v = random_matrix(n, 1, seed + 0x9e3779b9ULL);
  return v / v.norm();
}

// Random rank-r projector built directly from a QR factorization.
inline ComplexMatrix random_projector_matrix(Index n, Index r,
                                             std::uint64_t seed) {
  ComplexMatrix g = random_matrix(n, r, seed);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix b = qr.householderQ() * ComplexMatrix::Identity(n, r);
  return b * b.adjoint();
}

}  // namespace qtruth::testing
