// specalloc: admission control and channel selection under SINR targets.
//
//   specalloc gen        emit a random scenario
//   specalloc solve      transform -> admission -> channel selection on a scenario file
//   specalloc verify     run the invariant suite on a scenario file
//   specalloc experiment run a seeded study sweep and write CSV tables
//
// Exit codes: 0 success, 1 usage or input error, 2 invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "specalloc/experiment.hpp"
#include "specalloc/json_io.hpp"
#include "specalloc/oracle.hpp"
#include "specalloc/pipeline.hpp"
#include "specalloc/scengen.hpp"
#include "specalloc/verify.hpp"

namespace {

using namespace specalloc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct Common {
  std::uint64_t seed = 1;
  std::string transform = "unequal";
  std::string objective;
  std::uint64_t oracle_budget = kDefaultOriginalBudget;
  bool trace = false;
};

void emit(const json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(2) << '\n';
}

void apply_objective(Scenario& s, const std::string& objective) {
  if (objective.empty()) return;
  const RevenueMode mode = parse_revenue_mode(objective);
  for (User& u : s.users) u.revenue = revenue_for_target(u.sinr_target_db, mode);
}

int cmd_gen(const std::string& config_path, const std::optional<std::size_t>& users,
            const std::optional<std::string>& mode, const std::optional<int>& channels,
            const std::optional<double>& alpha, const Common& common, bool seed_given, const std::string& out) {
  GenConfig cfg;
  if (!config_path.empty()) cfg = read_json_file(config_path).get<GenConfig>();
  if (users) cfg.user_count = *users;
  if (mode) cfg.channel_set_mode = parse_channel_set_mode(*mode);
  if (channels) cfg.channel_universe = *channels;
  if (alpha) cfg.pathloss_exponent = *alpha;
  if (!common.objective.empty()) cfg.revenue_mode = parse_revenue_mode(common.objective);
  if (seed_given) cfg.seed = common.seed;
  emit(json(generate(cfg)), out);
  return kExitOk;
}

int cmd_solve(const std::string& path, const Common& common, double density, bool check_sufficiency, bool exact,
              const std::string& out) {
  Scenario scenario = read_scenario(path);
  apply_objective(scenario, common.objective);

  PipelineOptions opts;
  opts.transform = TransformSpec::parse(common.transform);
  opts.transform.density = density;
  opts.seed = common.seed;
  if (common.trace) {
    opts.on_admission = [](const AdmissionEvent& e) { std::cerr << json(e).dump() << '\n'; };
    opts.on_move = [](const MoveEvent& e) { std::cerr << json(e).dump() << '\n'; };
  }
  const PipelineResult res = run_pipeline(scenario, opts);

  json warnings = json::array();
  for (std::size_t i = 0; i < res.problem.size(); ++i) {
    if (res.problem.forced_zero[i]) {
      warnings.push_back("user " + std::to_string(i) + " cannot meet its SINR target even without interference");
    }
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w.get<std::string>() << '\n';

  json doc{{"transform", opts.transform.to_string()},
           {"seed", common.seed},
           {"admission", res.admission},
           {"allocation", res.selection.allocation},
           {"selection",
            {{"converged", res.selection.converged},
             {"rounds", res.selection.round},
             {"moves", res.selection.moves},
             {"potential", res.selection.potential}}},
           {"success", res.success},
           {"warnings", warnings}};

  int code = kExitOk;
  if (check_sufficiency) {
    json report{{"transform", opts.transform.to_string()}};
    try {
      const auto found = find_successful_assignment(scenario, res.admission.x, common.oracle_budget);
      report["status"] = found ? "holds" : "fails";
      if (found) report["assignment"] = *found;
      if (!found && opts.transform.kind == TransformKind::equal) code = kExitViolation;
    } catch (const BudgetExceeded& e) {
      report["status"] = "skipped";
      report["reason"] = e.what();
    }
    doc["sufficiency"] = report;
  }
  if (exact) {
    json ex;
    try {
      ex["original"] = solve_original_exact(scenario, common.oracle_budget);
    } catch (const BudgetExceeded& e) {
      ex["original"] = e.what();
    }
    try {
      ex["bqc"] = solve_bqc_exact(res.problem);
    } catch (const BudgetExceeded& e) {
      ex["bqc"] = e.what();
    }
    doc["exact"] = ex;
  }
  emit(doc, out);
  return code;
}

int cmd_verify(const std::string& path, const Common& common, std::size_t samples, const std::string& out) {
  Scenario scenario = read_scenario(path);
  apply_objective(scenario, common.objective);
  VerifyOptions opts;
  opts.seed = common.seed;
  opts.random_allocations = samples;
  opts.oracle_budget = common.oracle_budget;
  const VerifyReport report = verify_scenario(scenario, opts);
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  emit(json{{"ok", report.ok()}, {"checks", checks}}, out);
  return report.ok() ? kExitOk : kExitViolation;
}

int cmd_experiment(const std::string& path, const std::string& out_dir, const Common& common, bool seed_given,
                   bool budget_given) {
  auto cfg_json = read_json_file(path);
  ExperimentConfig cfg = ExperimentConfig::from_json(cfg_json);
  if (seed_given) cfg.seed = common.seed;
  if (budget_given) cfg.oracle_budget = common.oracle_budget;
  const ExperimentReport report = run_experiment(cfg);
  const auto files = write_reports(report, out_dir);
  json written = json::array();
  for (const auto& f : files) written.push_back(f.string());
  std::cout << json{{"runs", report.runs.size()},
                    {"neighbor_runs", report.neighbor_runs.size()},
                    {"invariant_violations", report.invariant_violations},
                    {"files", written}}
                   .dump(2)
            << '\n';
  return report.invariant_violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admission control and channel selection under SINR requirements"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Random seed");
    sub->add_option("--objective", common.objective, "Revenue model: maxsat or maxrev")
        ->check(CLI::IsMember({"maxsat", "maxrev"}));
    sub->add_option("--oracle-budget", common.oracle_budget, "Maximum candidates for exact enumeration");
  };

  std::string out;

  auto* gen = app.add_subcommand("gen", "Emit a random scenario as JSON");
  std::string gen_config;
  std::optional<std::size_t> gen_users;
  std::optional<std::string> gen_mode;
  std::optional<int> gen_channels;
  std::optional<double> gen_alpha;
  gen->add_option("--config", gen_config, "GenConfig JSON file")->check(CLI::ExistingFile);
  gen->add_option("-n,--users", gen_users, "Number of users");
  gen->add_option("--mode", gen_mode, "Channel sets: equal or uniform")->check(CLI::IsMember({"equal", "uniform"}));
  gen->add_option("--channels", gen_channels, "Channel universe size K");
  gen->add_option("--alpha", gen_alpha, "Pathloss exponent");
  gen->add_option("-o,--output", out, "Output file (default stdout)");
  add_common(gen);

  auto* solve_cmd = app.add_subcommand("solve", "Admit users and select channels for a scenario");
  std::string scenario_path;
  double density = kDefaultDensity;
  bool check_sufficiency = false;
  bool exact = false;
  solve_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--transform", common.transform, "equal | unequal | neighbor:<x>");
  solve_cmd->add_option("--density", density, "User density for neighbor radius (users/m^2)");
  solve_cmd->add_flag("--trace", common.trace, "Write admission and selection trace as JSON lines to stderr");
  solve_cmd->add_flag("--check-sufficiency", check_sufficiency,
                      "Exhaustively search for a channel assignment satisfying every admitted user");
  solve_cmd->add_flag("--exact", exact, "Also report exact optima when within budget");
  solve_cmd->add_option("-o,--output", out, "Output file (default stdout)");
  add_common(solve_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite on a scenario");
  std::size_t samples = 200;
  verify_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--samples", samples, "Random allocations per sampled check");
  verify_cmd->add_option("-o,--output", out, "Output file (default stdout)");
  add_common(verify_cmd);

  auto* exp_cmd = app.add_subcommand("experiment", "Run a study sweep and write CSV tables");
  std::string exp_config;
  std::string out_dir = "results";
  exp_cmd->add_option("config", exp_config, "Experiment JSON config")->required()->check(CLI::ExistingFile);
  exp_cmd->add_option("--out", out_dir, "Output directory");
  add_common(exp_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      return cmd_gen(gen_config, gen_users, gen_mode, gen_channels, gen_alpha, common,
                     gen->count("--seed") > 0, out);
    }
    if (*solve_cmd) return cmd_solve(scenario_path, common, density, check_sufficiency, exact, out);
    if (*verify_cmd) return cmd_verify(scenario_path, common, samples, out);
    if (*exp_cmd) {
      return cmd_experiment(exp_config, out_dir, common, exp_cmd->count("--seed") > 0,
                            exp_cmd->count("--oracle-budget") > 0);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
