#pragma once

#include <cstdint>

#include "qtruth/valuation.hpp"

namespace qtruth {

/// Uniform (Haar) unit vector on the sphere of C^n, deterministic per seed.
StateVector haar_state(Index n, std::uint64_t seed);

/// Rank-r orthogonal projector with Haar-random range; r must be
/// nontrivial (0 < r < n).
Projector random_projector(Index n, Index r, std::uint64_t seed);

struct OverdeterminationReport {
  Index n = 0;  // ambient dimension
  Index m = 0;  // independent columns of P
  Index k = 0;  // independent columns of I - P
  bool overdetermined_range = false;   // m < n
  bool overdetermined_kernel = false;  // k < n
};

OverdeterminationReport overdetermination_report(const Projector& p,
                                                 const Tolerance& tol = {});

struct GapStatistics {
  Index dimension = 0;
  Index projector_rank = 0;
  std::uint64_t trials = 0;
  std::uint64_t in_range = 0;
  std::uint64_t in_kernel = 0;
  std::uint64_t gap = 0;
  std::uint64_t seed = 0;
};

/// Valuates `trials` Haar states against one random rank-r projector under
/// the supervaluation semantics and tallies the outcomes. Per-trial
/// substreams are derived from the seed, so the tally is
/// order-independent.
GapStatistics gap_frequency(Index n, Index r, std::uint64_t trials,
                            std::uint64_t seed, const Tolerance& tol = {});

struct GapWitness {
  StateVector state;
  Projector projector;
  MembershipOutcome outcome;
};

/// Samples until a (state, projector) couple with outcome Neither is found;
/// expected on the first try. Throws after a bounded attempt budget.
GapWitness find_gap_witness(Index n, std::uint64_t seed,
                            const Tolerance& tol = {});

}  // namespace qtruth
