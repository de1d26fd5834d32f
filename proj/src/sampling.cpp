#include "qtruth/sampling.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qtruth {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index));
}

// Box-Muller on explicit uniform doubles; std::normal_distribution is not
// pinned down across standard libraries.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  double uniform_open() {
    // in (0, 1]; log() stays finite
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1p-53;
  }

  std::mt19937_64 engine_;
  double spare_ = 0;
  bool have_spare_ = false;
};

ComplexMatrix gaussian_matrix(Index rows, Index cols, std::uint64_t seed) {
  GaussianSource g(seed);
  ComplexMatrix m(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = Complex(g.next(), g.next());
  return m;
}

}  // namespace

StateVector haar_state(Index n, std::uint64_t seed) {
  if (n < 1) throw DimensionError("haar_state: n must be >= 1");
  ComplexMatrix v = gaussian_matrix(n, 1, seed);
  while (v.norm() == 0.0) v = gaussian_matrix(n, 1, splitmix64(seed));
  v /= v.norm();
  return StateVector(std::move(v));
}

Projector random_projector(Index n, Index r, std::uint64_t seed) {
  if (r < 1 || r >= n)
    throw InvariantError("random_projector: rank must be nontrivial (0 < r < n)");
  ComplexMatrix g = gaussian_matrix(n, r, seed);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix b = qr.householderQ() * ComplexMatrix::Identity(n, r);
  return Projector(b * b.adjoint());
}

OverdeterminationReport overdetermination_report(const Projector& p,
                                                 const Tolerance& tol) {
  OverdeterminationReport rep;
  rep.n = p.dim_ambient();
  rep.m = rank(p.matrix(), tol);
  rep.k = rank(p.complement().matrix(), tol);
  rep.overdetermined_range = rep.m < rep.n;
  rep.overdetermined_kernel = rep.k < rep.n;
  return rep;
}

GapStatistics gap_frequency(Index n, Index r, std::uint64_t trials,
                            std::uint64_t seed, const Tolerance& tol) {
  GapStatistics stats;
  stats.dimension = n;
  stats.projector_rank = r;
  stats.trials = trials;
  stats.seed = seed;

  const Projector p = random_projector(n, r, substream_seed(seed, 0));
  for (std::uint64_t t = 0; t < trials; ++t) {
    const StateVector psi = haar_state(n, substream_seed(seed, t + 1));
    switch (valuate(psi, p, Semantics::Supervaluation, tol)) {
      case TruthValue::True: ++stats.in_range; break;
      case TruthValue::False: ++stats.in_kernel; break;
      case TruthValue::Gap: ++stats.gap; break;
    }
  }
  return stats;
}

GapWitness find_gap_witness(Index n, std::uint64_t seed, const Tolerance& tol) {
  if (n < 2) throw DimensionError("find_gap_witness: n must be >= 2");
  constexpr int kAttempts = 1000;
  for (int a = 0; a < kAttempts; ++a) {
    const std::uint64_t s = substream_seed(seed, static_cast<std::uint64_t>(a));
    Projector p = random_projector(n, 1, s);
    StateVector psi = haar_state(n, splitmix64(s));
    MembershipOutcome out = membership(psi, p, MembershipMethod::Residual, tol);
    if (out.kind == MembershipKind::Neither)
      return GapWitness{std::move(psi), std::move(p), out};
  }
  throw InvariantError(
      "find_gap_witness: attempt budget exhausted; tolerances are likely "
      "misconfigured");
}

}  // namespace qtruth
