#include "qtruth/json_io.hpp"

namespace qtruth {

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      data.push_back({m(r, c).real(), m(r, c).imag()});
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data"))
    throw JsonFormatError("matrix: expected object with rows, cols, data");
  const auto rows = j.at("rows").get<Index>();
  const auto cols = j.at("cols").get<Index>();
  if (rows <= 0 || cols <= 0)
    throw JsonFormatError("matrix: rows and cols must be positive");
  const Json& data = j.at("data");
  if (!data.is_array() || data.size() != static_cast<std::size_t>(rows * cols))
    throw JsonFormatError("matrix: data length must equal rows * cols");
  ComplexMatrix m(rows, cols);
  std::size_t i = 0;
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c, ++i) {
      const Json& e = data[i];
      if (!e.is_array() || e.size() != 2)
        throw JsonFormatError("matrix: data entries must be [re, im] pairs");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  if (!all_finite(m)) throw JsonFormatError("matrix: non-finite entries");
  return m;
}

Json subspace_to_json(const Subspace& s) {
  return Json{{"ambient", s.dim_ambient()}, {"basis", matrix_to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j, const Tolerance& tol) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("basis"))
    throw JsonFormatError("subspace: expected object with ambient, basis");
  const ComplexMatrix basis = matrix_from_json(j.at("basis"));
  if (basis.rows() != j.at("ambient").get<Index>())
    throw JsonFormatError("subspace: basis rows disagree with ambient");
  return Subspace::from_columns(basis, tol);
}

Json projector_to_json(const Projector& p) {
  Json j = matrix_to_json(p.matrix());
  j["validated"] = true;
  return j;
}

Projector projector_from_json(const Json& j, const Tolerance& tol) {
  return Projector(matrix_from_json(j), tol);
}

Json state_to_json(const StateVector& s) {
  return Json{{"label", s.label()}, {"vector", matrix_to_json(s.vector())}};
}

StateVector state_from_json(const Json& j) {
  if (j.is_object() && j.contains("vector")) {
    std::string label = j.value("label", std::string{});
    return StateVector(matrix_from_json(j.at("vector")), std::move(label));
  }
  return StateVector(matrix_from_json(j));
}

Json valuation_report_to_json(const ValuationReport& r) {
  return Json{{"state", r.state},
              {"proposition", r.proposition},
              {"semantics", to_string(r.semantics)},
              {"truth", to_string(r.truth)},
              {"probability", r.probability},
              {"residual_range", r.residual_range},
              {"residual_kernel", r.residual_kernel}};
}

Json gap_statistics_to_json(const GapStatistics& s) {
  return Json{{"dimension", s.dimension},
              {"projector_rank", s.projector_rank},
              {"trials", s.trials},
              {"counts",
               {{"in_range", s.in_range},
                {"in_kernel", s.in_kernel},
                {"gap", s.gap}}},
              {"gap_fraction",
               s.trials == 0 ? 0.0
                             : static_cast<double>(s.gap) /
                                   static_cast<double>(s.trials)},
              {"seed", s.seed}};
}

Json overdetermination_to_json(const OverdeterminationReport& r) {
  return Json{{"n", r.n},
              {"m", r.m},
              {"k", r.k},
              {"overdetermined_R", r.overdetermined_range},
              {"overdetermined_K", r.overdetermined_kernel}};
}

}  // namespace qtruth
