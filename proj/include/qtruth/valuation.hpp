#pragma once

#include <optional>
#include <string>

#include "qtruth/subspace.hpp"

namespace qtruth {

enum class TruthValue { True, False, Gap };

/// Supervaluation admits the gap; QuantumLogicTotal folds it into False.
enum class Semantics { Supervaluation, QuantumLogicTotal };

enum class MembershipMethod { Residual, LinearSystem };

enum class MembershipKind { InRange, InKernel, Neither };

struct MembershipOutcome {
  MembershipKind kind = MembershipKind::Neither;
  MembershipMethod method_used = MembershipMethod::Residual;
  double residual_range = 0;   // distance of Psi from ran(P)
  double residual_kernel = 0;  // distance of Psi from ker(P)
};

/// Unit vector describing a pure state.
class StateVector {
 public:
  explicit StateVector(ComplexMatrix vector, std::string label = {});

  const ComplexMatrix& vector() const { return vector_; }
  const std::string& label() const { return label_; }
  Index dim() const { return vector_.rows(); }

 private:
  ComplexMatrix vector_;
  std::string label_;
};

MembershipOutcome membership(const StateVector& psi, const Projector& p,
                             MembershipMethod method = MembershipMethod::Residual,
                             const Tolerance& tol = {});

TruthValue valuate(const StateVector& psi, const Projector& p,
                   Semantics sem = Semantics::Supervaluation,
                   const Tolerance& tol = {},
                   MembershipMethod method = MembershipMethod::Residual);

struct Decomposition {
  ComplexMatrix range_part;   // P Psi
  ComplexMatrix kernel_part;  // (I - P) Psi
};

Decomposition decompose(const StateVector& psi, const Projector& p);

/// <Psi|P|Psi> clamped to [0, 1].
double born_probability(const StateVector& psi, const Projector& p);

struct ConsistencyReport {
  TruthValue truth = TruthValue::Gap;
  double probability = 0;
  bool consistent = false;
};

/// Checks the truth value against the Born probability: True pairs with
/// probability 1, False with 0, Gap with a strictly interior value. The
/// separation band is sqrt(residual_rel).
ConsistencyReport check_consistency(const StateVector& psi, const Projector& p,
                                    const Tolerance& tol = {});

const char* to_string(TruthValue t);
const char* to_string(Semantics s);
const char* to_string(MembershipMethod m);
const char* to_string(MembershipKind k);

}  // namespace qtruth
