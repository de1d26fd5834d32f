#include <cmath>

#include "doctest.h"
#include "qtruth/spin.hpp"
#include "qtruth/subspace.hpp"
#include "test_helpers.hpp"

using namespace qtruth;
using testing::random_projector_matrix;
using testing::random_unit_vector;

TEST_CASE("Projector validation") {
  CHECK_THROWS_AS(Projector{ComplexMatrix::Zero(2, 3)}, DimensionError);

  ComplexMatrix notherm(2, 2);
  notherm << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(Projector{notherm}, InvariantError);

  ComplexMatrix notidem = 2.0 * ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(Projector{notidem}, InvariantError);

  CHECK_NOTHROW(Projector(ComplexMatrix::Identity(3, 3)));
  CHECK(Projector::zero(3).dim_ambient() == 3);
  CHECK(Projector::identity(4).complement().matrix().norm() == 0.0);
}

TEST_CASE("range_of and kernel_of on the spin fixtures") {
  const auto fx = spin32_fixtures();
  Subspace ran = range_of(fx.projector_Y32);
  Subspace ker = kernel_of(fx.projector_Y32);
  CHECK(ran.dim() == 1);
  CHECK(ker.dim() == 3);
  CHECK(contains(ran, fx.ket_Y32.vector()));
  CHECK(contains(ker, fx.ket_Y12.vector()));
  CHECK(!contains(ran, fx.ket_X32.vector()));
  CHECK(!contains(ker, fx.ket_X32.vector()));

  CHECK(range_of(Projector::identity(4)).dim() == 4);
  CHECK(range_of(Projector::zero(4)).dim() == 0);
  CHECK(kernel_of(Projector::zero(4)).dim() == 4);
  CHECK(kernel_of(Projector::identity(4)).dim() == 0);
}

TEST_CASE("projector_of inverts range_of") {
  const auto fx = spin32_fixtures();
  Subspace line = Subspace::from_columns(fx.ket_Y32.vector());
  Projector p = projector_of(line);
  CHECK((p.matrix() - fx.projector_Y32.matrix()).norm() < 1e-12);

  CHECK(projector_of(Subspace::zero(3)).matrix().norm() == 0.0);
  CHECK((projector_of(Subspace::full(3)).matrix() -
         ComplexMatrix::Identity(3, 3)).norm() < 1e-12);

  for (std::uint64_t s = 0; s < 10; ++s) {
    Projector q(random_projector_matrix(5, 2, s));
    CHECK(equals(range_of(projector_of(range_of(q))), range_of(q)));
  }
}

TEST_CASE("contains rejects bad input") {
  Subspace ran = range_of(spin32_fixtures().projector_Y32);
  CHECK_THROWS_AS(contains(ran, ComplexMatrix::Zero(4, 1)), InvariantError);
  CHECK_THROWS_AS(contains(ran, ComplexMatrix::Ones(3, 1)), DimensionError);
  CHECK(contains(Subspace::full(4), random_unit_vector(4, 5)));
  CHECK(!contains(Subspace::zero(4), random_unit_vector(4, 5)));
}

TEST_CASE("meet and join on lines in C^4") {
  const auto fx = spin32_fixtures();
  Subspace y_line = range_of(fx.projector_Y32);
  Subspace x_line = Subspace::from_columns(fx.ket_X32.vector());

  // two distinct lines intersect only at 0; rank oracle on stacked bases
  ComplexMatrix stacked(4, 2);
  stacked << y_line.basis(), x_line.basis();
  REQUIRE(rank(stacked) == 2);
  CHECK(meet(x_line, y_line).dim() == 0);
  CHECK(join(y_line, x_line).dim() == 2);

  CHECK(equals(meet(y_line, y_line), y_line));
  CHECK(equals(meet(y_line, Subspace::full(4)), y_line));
  CHECK(equals(join(y_line, Subspace::zero(4)), y_line));
}

TEST_CASE("join of range and kernel is the whole space") {
  const auto fx = spin32_fixtures();
  Subspace j = join(range_of(fx.projector_Y32), kernel_of(fx.projector_Y32));
  CHECK(equals(j, Subspace::full(4)));
  for (std::uint64_t s = 0; s < 10; ++s) {
    Projector p(random_projector_matrix(5, 1 + static_cast<Index>(s % 4), s));
    CHECK(equals(join(range_of(p), kernel_of(p)), Subspace::full(5)));
  }
}

TEST_CASE("ortho_complement") {
  const auto fx = spin32_fixtures();
  CHECK(equals(ortho_complement(range_of(fx.projector_Y32)),
               kernel_of(fx.projector_Y32)));
  CHECK(ortho_complement(Subspace::full(4)).dim() == 0);
  CHECK(ortho_complement(Subspace::zero(4)).dim() == 4);
  for (std::uint64_t s = 0; s < 10; ++s) {
    Subspace sp = range_of(Projector(random_projector_matrix(6, 2, 40 + s)));
    CHECK(equals(ortho_complement(ortho_complement(sp)), sp));
  }
}

TEST_CASE("equals distinguishes range from kernel") {
  const auto fx = spin32_fixtures();
  Subspace ran = range_of(fx.projector_Y32);
  CHECK(equals(ran, ran));
  CHECK(!equals(ran, kernel_of(fx.projector_Y32)));
}

TEST_CASE("direct-sum decomposition and exclusion properties") {
  for (std::uint64_t s = 0; s < 25; ++s) {
    const Index n = 2 + static_cast<Index>(s % 5);
    const Index r = 1 + static_cast<Index>(s % (n - 1 > 0 ? n - 1 : 1));
    Projector p(random_projector_matrix(n, r, 500 + s));
    ComplexMatrix v = random_unit_vector(n, 600 + s);

    ComplexMatrix a = p.matrix() * v;
    ComplexMatrix b = v - a;
    CHECK((v - (a + b)).norm() <= 1e-12);
    CHECK(std::abs((a.adjoint() * b)(0, 0)) <= 1e-9);

    CHECK(rank(p.matrix()) + kernel_of(p).dim() == n);

    // kernel membership excludes range membership
    if (kernel_of(p).dim() > 0) {
      ComplexMatrix kv = kernel_of(p).basis().col(0);
      CHECK(contains(kernel_of(p), kv));
      CHECK(!contains(range_of(p), kv));
    }
  }
}

TEST_CASE("De Morgan duality on random subspaces") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    const Index n = 3 + static_cast<Index>(s % 6);
    Subspace a = range_of(Projector(
        random_projector_matrix(n, 1 + static_cast<Index>(s % (n - 1)), 700 + s)));
    Subspace b = range_of(Projector(
        random_projector_matrix(n, 1 + static_cast<Index>((s + 1) % (n - 1)), 800 + s)));
    CHECK(equals(ortho_complement(meet(a, b)),
                 join(ortho_complement(a), ortho_complement(b))));
  }
}
