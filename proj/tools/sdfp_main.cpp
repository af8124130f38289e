// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: solve / generate / check.
//
// Exit codes: 0 feasible or check passed, 1 infeasible at the requested
// level (or check failed), 2 iteration budget exhausted, 64 usage error,
// 65 problem parse error, 70 internal numerical error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "sdfp/generator.hpp"
#include "sdfp/preprocess.hpp"
#include "sdfp/problem_io.hpp"
#include "sdfp/result_io.hpp"
#include "sdfp/solver.hpp"

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitInternal = 70;

int status_exit_code(sdfp::SolveStatus status) {
  switch (status) {
    case sdfp::SolveStatus::Feasible:
      return kExitFeasible;
    case sdfp::SolveStatus::InfeasibleAtLevel:
      return kExitInfeasible;
    case sdfp::SolveStatus::BudgetExhausted:
      return kExitBudget;
  }
  return kExitInternal;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sdfp::Error("cannot open output file: " + path);
  out << text;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sdfp::Error("cannot open file: " + path);
  return nlohmann::json::parse(in);
}

struct SolveOptions {
  std::string file;
  std::string mode = "direct";
  double delta = 1e-3;
  double tol = 1e-8;
  std::string trace_path;
  std::int64_t max_iters = 0;
  bool as_json = false;
};

int run_solve(const SolveOptions& opt) {
  const sdfp::ConstraintMap problem = sdfp::load_problem(opt.file);

  sdfp::SolverConfig config;
  config.residual_tol = opt.tol;
  config.trace_enabled = !opt.trace_path.empty();
  if (opt.max_iters > 0) config.max_total_iterations = opt.max_iters;

  sdfp::SolveResult result;
  std::optional<sdfp::RestoreReport> restored;
  if (opt.mode == "direct") {
    config.lambda_threshold = opt.delta;
    result = sdfp::solve(problem, config);
  } else {
    sdfp::ApproxResult approx = sdfp::solve_approx(problem, opt.delta, config);
    result = std::move(approx.homogenized);
    restored = std::move(approx.restored);
  }

  if (!opt.trace_path.empty()) {
    write_text_file(opt.trace_path, sdfp::trace_to_json(result.trace).dump(2) + "\n");
  }

  if (opt.as_json) {
    nlohmann::json out = sdfp::result_to_json(result);
    if (restored) {
      out["restored"] = {{"x_hat", sdfp::blockvec_to_json(restored->x_hat)},
                         {"t", restored->t},
                         {"residual_bound", restored->residual_bound},
                         {"residual_actual", restored->residual_actual}};
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << sdfp::result_to_text(result);
    if (restored) {
      std::cout << "restored residual_actual=" << restored->residual_actual
                << " bound=" << restored->residual_bound << " t=" << restored->t << '\n';
    }
  }
  return status_exit_code(result.status);
}

struct GenerateOptions {
  std::string sizes_csv;
  int m = 1;
  std::string kind = "feasible";
  std::uint64_t seed = 42;
  double magnitude = 1.0;
  std::string output;
  std::string oracle_path;
};

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> sizes;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    sizes.push_back(std::stoi(item));
  }
  if (sizes.empty()) throw CLI::ValidationError("--sizes", "needs at least one block size");
  return sizes;
}

int run_generate(const GenerateOptions& opt) {
  sdfp::GeneratorSpec spec;
  spec.sizes = parse_sizes(opt.sizes_csv);
  spec.m = opt.m;
  spec.kind = opt.kind == "feasible" ? sdfp::InstanceKind::PlantedFeasible
                                     : sdfp::InstanceKind::CertifiedInfeasible;
  spec.seed = opt.seed;
  spec.magnitude = opt.magnitude;

  const sdfp::GeneratedInstance instance = sdfp::generate_instance(spec);
  sdfp::save_problem(instance.map, opt.output);
  if (!opt.oracle_path.empty()) {
    write_text_file(opt.oracle_path, sdfp::oracle_to_json(instance).dump(2) + "\n");
  }
  std::cout << "wrote " << opt.output << " (" << opt.kind << ", m=" << spec.m << ")\n";
  return 0;
}

struct CheckOptions {
  std::string file;
  std::string solution_path;
  double tol = 1e-8;
};

int run_check(const CheckOptions& opt) {
  const sdfp::ConstraintMap problem = sdfp::load_problem(opt.file);
  const sdfp::BlockVec x = sdfp::solution_from_json(read_json_file(opt.solution_path));
  const sdfp::CertificateReport report = sdfp::verify_certificate(problem, x, opt.tol);
  std::cout << (report.pass ? "pass" : "fail") << "  residual=" << report.residual_inf
            << " min_eig=" << report.min_eig << " trace=" << report.trace << '\n';
  return report.pass ? kExitFeasible : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasibility solver for block-diagonal semidefinite systems Ax = 0"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a problem file");
  solve_cmd->add_option("file", solve_opt.file, "problem file (SDFP format)")->required();
  solve_cmd->add_option("--mode", solve_opt.mode, "direct | approx")
      ->check(CLI::IsMember({"direct", "approx"}));
  solve_cmd->add_option("--delta", solve_opt.delta,
                        "eigenvalue level (direct) or perturbation (approx)");
  solve_cmd->add_option("--tol", solve_opt.tol, "residual tolerance");
  solve_cmd->add_option("--trace", solve_opt.trace_path, "write the iteration trace (JSON)");
  solve_cmd->add_option("--max-iters", solve_opt.max_iters, "iteration safety cap");
  solve_cmd->add_flag("--json", solve_opt.as_json, "emit the result as JSON");

  GenerateOptions gen_opt;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Generate a random instance");
  gen_cmd->add_option("--sizes", gen_opt.sizes_csv, "block sizes, e.g. 3,2,1")->required();
  gen_cmd->add_option("--m", gen_opt.m, "number of constraints")->required();
  gen_cmd->add_option("--kind", gen_opt.kind, "feasible | infeasible")
      ->check(CLI::IsMember({"feasible", "infeasible"}));
  gen_cmd->add_option("--seed", gen_opt.seed, "random seed");
  gen_cmd->add_option("--magnitude", gen_opt.magnitude, "entry scale");
  gen_cmd->add_option("-o,--output", gen_opt.output, "output problem file")->required();
  gen_cmd->add_option("--oracle", gen_opt.oracle_path, "write the planted oracle (JSON)");

  CheckOptions check_opt;
  CLI::App* check_cmd = app.add_subcommand("check", "Verify a claimed solution");
  check_cmd->add_option("file", check_opt.file, "problem file")->required();
  check_cmd->add_option("--solution", check_opt.solution_path, "solution JSON")->required();
  check_cmd->add_option("--tol", check_opt.tol, "residual tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve_opt);
    if (*gen_cmd) return run_generate(gen_opt);
    if (*check_cmd) return run_check(check_opt);
  } catch (const sdfp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const sdfp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
