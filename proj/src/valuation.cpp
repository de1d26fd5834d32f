#include "qtruth/valuation.hpp"

#include <algorithm>
#include <cmath>

namespace qtruth {

StateVector::StateVector(ComplexMatrix vector, std::string label)
    : vector_(std::move(vector)), label_(std::move(label)) {
  if (vector_.cols() != 1)
    throw DimensionError("StateVector: expected a column vector");
  if (!all_finite(vector_))
    throw InvariantError("StateVector: non-finite entries");
  if (std::abs(vector_.norm() - 1.0) > 1e-12)
    throw InvariantError("StateVector: vector is not unit norm");
}

namespace {

ComplexMatrix select_columns(const ComplexMatrix& m,
                             const std::vector<Index>& idx) {
  ComplexMatrix out(m.rows(), static_cast<Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) out.col(static_cast<Index>(j)) = m.col(idx[j]);
  return out;
}

}  // namespace

MembershipOutcome membership(const StateVector& psi, const Projector& p,
                             MembershipMethod method, const Tolerance& tol) {
  if (psi.dim() != p.dim_ambient())
    throw DimensionError("membership: dimension mismatch");
  MembershipOutcome out;
  out.method_used = method;
  const ComplexMatrix& v = psi.vector();
  if (method == MembershipMethod::Residual) {
    out.residual_range = (v - p.matrix() * v).norm();
    out.residual_kernel = (p.matrix() * v).norm();
  } else {
    // Linear-system route: solve R X = Psi and K X = Psi where R and K
    // collect the linearly independent columns of P and I - P.
    const ComplexMatrix r =
        select_columns(p.matrix(), independent_column_indices(p.matrix(), tol));
    const ComplexMatrix ip = p.complement().matrix();
    const ComplexMatrix k = select_columns(ip, independent_column_indices(ip, tol));
    out.residual_range = least_squares_solve(r, v).residual_norm;
    out.residual_kernel = least_squares_solve(k, v).residual_norm;
  }
  const double cut = tol.residual_rel * v.norm();
  if (out.residual_range <= cut)
    out.kind = MembershipKind::InRange;
  else if (out.residual_kernel <= cut)
    out.kind = MembershipKind::InKernel;
  else
    out.kind = MembershipKind::Neither;
  return out;
}

TruthValue valuate(const StateVector& psi, const Projector& p, Semantics sem,
                   const Tolerance& tol, MembershipMethod method) {
  switch (membership(psi, p, method, tol).kind) {
    case MembershipKind::InRange:
      return TruthValue::True;
    case MembershipKind::InKernel:
      return TruthValue::False;
    case MembershipKind::Neither:
      return sem == Semantics::Supervaluation ? TruthValue::Gap
                                              : TruthValue::False;
  }
  return TruthValue::Gap;  // unreachable
}

Decomposition decompose(const StateVector& psi, const Projector& p) {
  if (psi.dim() != p.dim_ambient())
    throw DimensionError("decompose: dimension mismatch");
  Decomposition d;
  d.range_part = p.matrix() * psi.vector();
  d.kernel_part = psi.vector() - d.range_part;
  return d;
}

double born_probability(const StateVector& psi, const Projector& p) {
  if (psi.dim() != p.dim_ambient())
    throw DimensionError("born_probability: dimension mismatch");
  const double prob = (p.matrix() * psi.vector()).squaredNorm();
  return std::clamp(prob, 0.0, 1.0);
}

ConsistencyReport check_consistency(const StateVector& psi, const Projector& p,
                                    const Tolerance& tol) {
  ConsistencyReport rep;
  rep.truth = valuate(psi, p, Semantics::Supervaluation, tol);
  rep.probability = born_probability(psi, p);
  const double band = std::sqrt(tol.residual_rel);
  switch (rep.truth) {
    case TruthValue::True:
      rep.consistent = std::abs(rep.probability - 1.0) <= band;
      break;
    case TruthValue::False:
      rep.consistent = rep.probability <= band;
      break;
    case TruthValue::Gap:
      rep.consistent = rep.probability > band && rep.probability < 1.0 - band;
      break;
  }
  return rep;
}

const char* to_string(TruthValue t) {
  switch (t) {
    case TruthValue::True: return "true";
    case TruthValue::False: return "false";
    case TruthValue::Gap: return "gap";
  }
  return "?";
}

const char* to_string(Semantics s) {
  return s == Semantics::Supervaluation ? "SV" : "QL";
}

const char* to_string(MembershipMethod m) {
  return m == MembershipMethod::Residual ? "residual" : "linsys";
}

const char* to_string(MembershipKind k) {
  switch (k) {
    case MembershipKind::InRange: return "in_range";
    case MembershipKind::InKernel: return "in_kernel";
    case MembershipKind::Neither: return "neither";
  }
  return "?";
}

}  // namespace qtruth
