#pragma once

#include <string>

#include "json.hpp"
#include "qtruth/sampling.hpp"
#include "qtruth/subspace.hpp"
#include "qtruth/valuation.hpp"

namespace qtruth {

using Json = nlohmann::json;

/// Matrix wire format: {"rows": r, "cols": c, "data": [[re, im], ...]}
/// with data in row-major order.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// Subspace wire format: {"ambient": n, "basis": <matrix>}.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, const Tolerance& tol = {});

/// Projector wire format: matrix plus a "validated" flag.
Json projector_to_json(const Projector& p);
Projector projector_from_json(const Json& j, const Tolerance& tol = {});

/// State wire format: {"label": ..., "vector": <matrix>}; a bare matrix
/// object is also accepted on input.
Json state_to_json(const StateVector& s);
StateVector state_from_json(const Json& j);

struct ValuationReport {
  std::string state;
  std::string proposition;
  Semantics semantics = Semantics::Supervaluation;
  TruthValue truth = TruthValue::Gap;
  double probability = 0;
  double residual_range = 0;
  double residual_kernel = 0;
};

Json valuation_report_to_json(const ValuationReport& r);

Json gap_statistics_to_json(const GapStatistics& s);
Json overdetermination_to_json(const OverdeterminationReport& r);

class JsonFormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qtruth
