// qtruth command line: truth-value assignment for experimental quantum
// propositions. Exit codes: 0 success, 1 internal check failure, 2 usage or
// input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qtruth/json_io.hpp"
#include "qtruth/logic.hpp"
#include "qtruth/sampling.hpp"
#include "qtruth/spin.hpp"

using namespace qtruth;

namespace {

struct RunConfig {
  Tolerance tol;
  std::uint64_t seed = 0;
  std::string format = "json";
};

Json config_json(const RunConfig& cfg) {
  return Json{{"tol_rank", cfg.tol.rank_rel},
              {"tol_residual", cfg.tol.residual_rel},
              {"seed", cfg.seed},
              {"format", cfg.format}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw JsonFormatError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

Semantics parse_semantics(const std::string& s) {
  if (s == "sv") return Semantics::Supervaluation;
  if (s == "ql") return Semantics::QuantumLogicTotal;
  throw CLI::ValidationError("--semantics must be sv or ql");
}

MembershipMethod parse_method(const std::string& s) {
  if (s == "residual") return MembershipMethod::Residual;
  if (s == "linsys") return MembershipMethod::LinearSystem;
  throw CLI::ValidationError("--method must be residual or linsys");
}

void print_report(const RunConfig& cfg, Json j) {
  j["config"] = config_json(cfg);
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // flat aligned table
  const Json flat = j.flatten();
  for (const auto& [key, value] : flat.items())
    std::printf("%-40s %s\n", key.c_str(), value.dump().c_str());
}

int cmd_valuate(const RunConfig& cfg, const std::string& state_file,
                const std::string& projector_file, Semantics sem,
                MembershipMethod method) {
  StateVector psi = state_from_json(load_json_file(state_file));
  Projector p = projector_from_json(load_json_file(projector_file), cfg.tol);
  MembershipOutcome out = membership(psi, p, method, cfg.tol);
  TruthValue truth = valuate(psi, p, sem, cfg.tol, method);

  ValuationReport rep;
  rep.state = psi.label().empty() ? state_file : psi.label();
  rep.proposition = projector_file;
  rep.semantics = sem;
  rep.truth = truth;
  rep.probability = born_probability(psi, p);
  rep.residual_range = out.residual_range;
  rep.residual_kernel = out.residual_kernel;

  Json j = valuation_report_to_json(rep);
  j["method"] = to_string(method);
  j["membership"] = to_string(out.kind);
  print_report(cfg, j);
  return 0;
}

// Replays the spin-3/2 walkthrough end to end and checks every number.
int cmd_demo_spin32(const RunConfig& cfg) {
  const SpinFixtureSet fx = spin32_fixtures();
  const Complex i(0, 1);
  bool ok = true;
  Json j;

  // derived eigenprojector agrees with the fixture
  Projector derived = eigenprojector(spin_matrices(1.5).sy, 1.5, cfg.tol);
  const double proj_err =
      (derived.matrix() - fx.projector_Y32.matrix()).cwiseAbs().maxCoeff();
  ok = ok && proj_err < 1e-12;
  j["eigenprojector_max_error"] = proj_err;
  j["projector_Y32"] = projector_to_json(fx.projector_Y32);

  // truth table under both semantics and both membership methods
  Json table = Json::array();
  struct Row {
    const StateVector* psi;
    TruthValue expect_sv;
  } rows[] = {{&fx.ket_Y32, TruthValue::True},
              {&fx.ket_Y12, TruthValue::False},
              {&fx.ket_X32, TruthValue::Gap}};
  for (const auto& row : rows) {
    for (auto method :
         {MembershipMethod::Residual, MembershipMethod::LinearSystem}) {
      TruthValue sv = valuate(*row.psi, fx.projector_Y32,
                              Semantics::Supervaluation, cfg.tol, method);
      TruthValue ql = valuate(*row.psi, fx.projector_Y32,
                              Semantics::QuantumLogicTotal, cfg.tol, method);
      ok = ok && sv == row.expect_sv;
      TruthValue folded = sv == TruthValue::Gap ? TruthValue::False : sv;
      ok = ok && ql == folded;
      table.push_back({{"state", row.psi->label()},
                       {"method", to_string(method)},
                       {"truth_sv", to_string(sv)},
                       {"truth_ql", to_string(ql)},
                       {"probability",
                        born_probability(*row.psi, fx.projector_Y32)}});
    }
  }
  j["truth_table"] = table;

  // linear systems: range column against |Y+3/2>, kernel columns against
  // |Y+1/2>
  ComplexMatrix r = 8.0 * fx.projector_Y32.matrix().col(0);
  auto rsol = least_squares_solve(r, fx.ket_Y32.vector());
  const Complex expect_x = i / (2.0 * std::sqrt(2.0));
  ok = ok && rsol.residual_norm <= 1e-12 &&
       std::abs(rsol.x(0, 0) - expect_x) <= 1e-9;
  j["range_system"] = {{"solution", {rsol.x(0, 0).real(), rsol.x(0, 0).imag()}},
                       {"residual", rsol.residual_norm}};

  ComplexMatrix k = (8.0 * fx.projector_Y32.complement().matrix()).leftCols(3);
  auto ksol = least_squares_solve(k, fx.ket_Y12.vector());
  const double f = 1.0 / (8.0 * std::sqrt(2.0));
  ComplexMatrix expect_k(3, 1);
  expect_k << -i * std::sqrt(3.0) * f, 2.0 * f, i * f;
  ok = ok && ksol.residual_norm <= 1e-9 &&
       (ksol.x - expect_k).cwiseAbs().maxCoeff() <= 1e-9;
  j["kernel_system"] = {{"solution", matrix_to_json(ksol.x)},
                        {"residual", ksol.residual_norm}};

  // unsolvability for |X+3/2> on both sides
  auto rx = least_squares_solve(r, fx.ket_X32.vector());
  auto kx = least_squares_solve(k, fx.ket_X32.vector());
  ok = ok && rx.residual_norm > std::sqrt(cfg.tol.residual_rel) &&
       kx.residual_norm > std::sqrt(cfg.tol.residual_rel);
  j["x32_residuals"] = {{"range", rx.residual_norm},
                        {"kernel", kx.residual_norm}};

  // distributive law fails at the |X+3/2> witness
  Projector q(fx.ket_X32.vector() * fx.ket_X32.vector().adjoint(), cfg.tol);
  auto dist = distributivity_check(q, fx.projector_Y32, fx.ket_X32, cfg.tol);
  ok = ok && dist.lhs_value == TruthValue::True &&
       dist.rhs_value == TruthValue::False;
  j["distributivity"] = {{"lhs", to_string(dist.lhs_value)},
                         {"rhs", to_string(dist.rhs_value)},
                         {"lhs_dim", dist.lhs_subspace_dim},
                         {"rhs_dim", dist.rhs_subspace_dim},
                         {"holds", dist.holds}};

  // overdetermination bookkeeping
  j["overdetermination"] =
      overdetermination_to_json(overdetermination_report(fx.projector_Y32, cfg.tol));

  j["all_checks_passed"] = ok;
  print_report(cfg, j);
  return ok ? 0 : 1;
}

int cmd_sample(const RunConfig& cfg, const std::vector<Index>& dims, Index rank,
               std::uint64_t trials) {
  if (cfg.format == "csv") {
    std::printf("dimension,rank,gap_fraction\n");
    for (Index n : dims) {
      auto stats = gap_frequency(n, rank, trials, cfg.seed, cfg.tol);
      const double frac = stats.trials == 0
                              ? 0.0
                              : static_cast<double>(stats.gap) /
                                    static_cast<double>(stats.trials);
      std::printf("%lld,%lld,%.6f\n", static_cast<long long>(n),
                  static_cast<long long>(rank), frac);
    }
    return 0;
  }
  Json all = Json::array();
  for (Index n : dims)
    all.push_back(
        gap_statistics_to_json(gap_frequency(n, rank, trials, cfg.seed, cfg.tol)));
  print_report(cfg, all.size() == 1 ? all[0] : Json{{"runs", all}});
  return 0;
}

int cmd_logic(const RunConfig& cfg, const std::string& formula_text,
              const std::string& state_file, const std::string& manifest_file,
              Semantics sem) {
  StateVector psi = state_from_json(load_json_file(state_file));
  Json manifest = load_json_file(manifest_file);
  if (!manifest.is_object())
    throw JsonFormatError("atoms manifest must be a JSON object");
  std::map<std::string, Projector> atoms;
  for (const auto& [label, value] : manifest.items()) {
    // entries are inline projector JSON or a path to one
    Json pj = value.is_string() ? load_json_file(value.get<std::string>()) : value;
    atoms.emplace(label, projector_from_json(pj, cfg.tol));
  }

  Formula f = parse_formula(formula_text, atoms);
  Subspace rep = represent(f, cfg.tol);
  TruthValue truth = evaluate(f, psi, sem, cfg.tol);

  print_report(cfg, Json{{"formula", f.to_text()},
                         {"state", psi.label().empty() ? state_file : psi.label()},
                         {"semantics", to_string(sem)},
                         {"truth", to_string(truth)},
                         {"subspace_dim", rep.dim()}});
  return 0;
}

int cmd_fixtures_export(const std::string& dir) {
  const SpinFixtureSet fx = spin32_fixtures();
  std::filesystem::create_directories(dir);
  auto path = [&](const char* name) { return dir + "/" + name; };
  write_json_file(path("projector_Y32.json"), projector_to_json(fx.projector_Y32));
  write_json_file(path("ket_Y32.json"), state_to_json(fx.ket_Y32));
  write_json_file(path("ket_Y12.json"), state_to_json(fx.ket_Y12));
  write_json_file(path("ket_X32.json"), state_to_json(fx.ket_X32));
  write_json_file(path("range_Y32.json"),
                  subspace_to_json(range_of(fx.projector_Y32)));
  write_json_file(path("kernel_Y32.json"),
                  subspace_to_json(kernel_of(fx.projector_Y32)));
  std::printf("wrote 6 fixture files to %s\n", dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truth-value assignment for experimental quantum propositions"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--tol-rank", cfg.tol.rank_rel, "relative rank cutoff")
      ->check(CLI::Range(1e-300, 1.0));
  app.add_option("--tol-residual", cfg.tol.residual_rel,
                 "relative residual cutoff")
      ->check(CLI::Range(1e-300, 1.0));
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "table", "csv"}));

  // valuate
  std::string state_file, projector_file;
  std::string semantics_flag = "sv", method_flag = "residual";
  auto* valuate_cmd = app.add_subcommand(
      "valuate", "valuate one proposition against one state");
  valuate_cmd->add_option("state", state_file, "state JSON file")->required();
  valuate_cmd->add_option("projector", projector_file, "projector JSON file")
      ->required();
  valuate_cmd->add_option("--semantics", semantics_flag, "sv or ql");
  valuate_cmd->add_option("--method", method_flag, "residual or linsys");

  // demo-spin32
  auto* demo_cmd =
      app.add_subcommand("demo-spin32", "replay the spin-3/2 walkthrough");

  // sample
  std::vector<Index> dims{4};
  Index sample_rank = 1;
  std::uint64_t trials = 10000;
  auto* sample_cmd =
      app.add_subcommand("sample", "gap-frequency statistics for Haar states");
  sample_cmd->add_option("-n,--dim", dims, "ambient dimension(s)");
  sample_cmd->add_option("-r,--rank", sample_rank, "projector rank");
  sample_cmd->add_option("-t,--trials", trials, "number of Haar states");

  // logic
  std::string formula_text, atoms_manifest;
  auto* logic_cmd =
      app.add_subcommand("logic", "evaluate a compound formula at a state");
  logic_cmd->add_option("formula", formula_text, "formula text, e.g. 'Q & (P | !P)'")
      ->required();
  logic_cmd->add_option("state", state_file, "state JSON file")->required();
  logic_cmd->add_option("atoms", atoms_manifest,
                        "JSON object mapping labels to projectors")
      ->required();
  logic_cmd->add_option("--semantics", semantics_flag, "sv or ql");

  // fixtures export
  std::string export_dir = "fixtures/spin32";
  auto* fixtures_cmd = app.add_subcommand("fixtures", "fixture data utilities");
  auto* export_cmd =
      fixtures_cmd->add_subcommand("export", "write the spin-3/2 fixtures");
  export_cmd->add_option("--dir", export_dir, "output directory");
  fixtures_cmd->require_subcommand(1);

  // global flags may also appear after the subcommand name
  for (auto* sub : {valuate_cmd, demo_cmd, sample_cmd, logic_cmd, fixtures_cmd,
                    export_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (valuate_cmd->parsed())
      return cmd_valuate(cfg, state_file, projector_file,
                         parse_semantics(semantics_flag),
                         parse_method(method_flag));
    if (demo_cmd->parsed()) return cmd_demo_spin32(cfg);
    if (sample_cmd->parsed()) return cmd_sample(cfg, dims, sample_rank, trials);
    if (logic_cmd->parsed())
      return cmd_logic(cfg, formula_text, state_file, atoms_manifest,
                       parse_semantics(semantics_flag));
    if (export_cmd->parsed()) return cmd_fixtures_export(export_dir);
  } catch (const JsonFormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const FormulaParseError& e) {
    std::cerr << "formula error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
