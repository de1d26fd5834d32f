#include <cmath>

#include "doctest.h"
#include "qtruth/spin.hpp"

using namespace qtruth;

namespace {
const Complex kI(0, 1);
}

TEST_CASE("spin_matrices for j = 1/2 are the halved Pauli matrices") {
  auto s = spin_matrices(0.5);
  ComplexMatrix sy(2, 2), sz(2, 2);
  sy << 0.0, -0.5 * kI, 0.5 * kI, 0.0;
  sz << 0.5, 0.0, 0.0, -0.5;
  CHECK((s.sy - sy).norm() < 1e-14);
  CHECK((s.sz - sz).norm() < 1e-14);
}

TEST_CASE("spin_matrices commutation relation") {
  for (double j : {0.5, 1.0, 1.5, 2.0}) {
    CAPTURE(j);
    auto s = spin_matrices(j);
    ComplexMatrix comm = s.sx * s.sy - s.sy * s.sx;
    CHECK((comm - kI * s.sz).norm() < 1e-12);
    CHECK((s.sx - s.sx.adjoint()).norm() < 1e-14);
    CHECK((s.sy - s.sy.adjoint()).norm() < 1e-14);
  }
}

TEST_CASE("spin_matrices rejects invalid j") {
  CHECK_THROWS_AS(spin_matrices(0.0), InvariantError);
  CHECK_THROWS_AS(spin_matrices(-1.0), InvariantError);
  CHECK_THROWS_AS(spin_matrices(0.7), InvariantError);
}

TEST_CASE("Sy eigenvalues for j = 3/2") {
  auto s = spin_matrices(1.5);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s.sy);
  Eigen::VectorXd w = es.eigenvalues();
  CHECK(w(0) == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(w(1) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(w(2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w(3) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("eigenprojector reproduces the worked fixture") {
  auto s = spin_matrices(1.5);
  Projector p = eigenprojector(s.sy, 1.5);
  const auto fx = spin32_fixtures();
  CHECK((p.matrix() - fx.projector_Y32.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("eigenprojector basics") {
  auto s = spin_matrices(0.5);
  Projector up = eigenprojector(s.sz, 0.5);
  ComplexMatrix expect(2, 2);
  expect << 1.0, 0.0, 0.0, 0.0;
  CHECK((up.matrix() - expect).norm() < 1e-12);

  CHECK_THROWS_AS(eigenprojector(s.sz, 0.3), InvariantError);

  auto s32 = spin_matrices(1.5);
  ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
  for (double lam : {-1.5, -0.5, 0.5, 1.5})
    sum += eigenprojector(s32.sy, lam).matrix();
  CHECK((sum - ComplexMatrix::Identity(4, 4)).norm() < 1e-12);
}

TEST_CASE("eigenprojectors of distinct eigenvalues are orthogonal") {
  auto s = spin_matrices(1.5);
  ComplexMatrix a = eigenprojector(s.sy, 1.5).matrix();
  ComplexMatrix b = eigenprojector(s.sy, 0.5).matrix();
  CHECK((a * b).norm() < 1e-12);
}

TEST_CASE("spin32_fixtures internal consistency") {
  const auto fx = spin32_fixtures();
  // eigenvector property
  CHECK((fx.projector_Y32.matrix() * fx.ket_Y32.vector() -
         fx.ket_Y32.vector()).norm() < 1e-9);
  // orthogonality of distinct Sy eigenkets
  CHECK(std::abs((fx.ket_Y32.vector().adjoint() * fx.ket_Y12.vector())(0, 0)) <
        1e-12);
  CHECK(fx.ket_X32.vector().norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fx.ket_Y32.label() == "ket_Y32");
}
