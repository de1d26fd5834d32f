#pragma once

#include "qtruth/valuation.hpp"

namespace qtruth {

struct SpinMatrices {
  ComplexMatrix sx, sy, sz;
};

/// Angular-momentum component matrices for spin j in the z-basis, units
/// hbar = 1. Sz is diagonal with entries j, j-1, ..., -j.
SpinMatrices spin_matrices(double j);

/// Projector onto the eigenspace of a Hermitian matrix for eigenvalue
/// lambda; throws if lambda is not an eigenvalue (to within the band
/// sqrt(residual_rel) scaled by the spectral radius).
Projector eigenprojector(const ComplexMatrix& m, double lambda,
                         const Tolerance& tol = {});

/// The spin-3/2 worked fixtures: the projector for "spin along Y is +3/2"
/// and the three states used in the truth-table demonstration.
struct SpinFixtureSet {
  Projector projector_Y32;
  StateVector ket_Y32;
  StateVector ket_Y12;
  StateVector ket_X32;
};

SpinFixtureSet spin32_fixtures();

}  // namespace qtruth
