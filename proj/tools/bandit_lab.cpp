#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "banditlab/presets.hpp"
#include "banditlab/runner.hpp"
#include "banditlab/theory.hpp"
#include "banditlab/verifiers.hpp"

namespace {

using namespace banditlab;

Scenario resolve_scenario(const std::string& target) {
  if (const Scenario* preset = find_preset(target)) return *preset;
  return load_scenario_file(target);
}

// Keeps roster entries whose label or type matches any token; every token
// must match something.
void filter_roster(Scenario& sc, const std::vector<std::string>& tokens) {
  if (tokens.empty()) return;
  std::vector<PolicySpec> kept;
  for (const std::string& token : tokens) {
    bool matched = false;
    for (const PolicySpec& ps : sc.roster) {
      if (ps.label() == token || ps.type == token) {
        kept.push_back(ps);
        matched = true;
      }
    }
    if (!matched) {
      throw std::invalid_argument("no roster entry matches policy '" + token + "'");
    }
  }
  sc.roster = std::move(kept);
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int report_verdicts(const std::vector<VerifierReport>& reports, bool csv) {
  bool all_pass = true;
  if (csv) std::cout << "check,pass,detail\n";
  for (const VerifierReport& r : reports) {
    all_pass = all_pass && r.pass;
    if (csv) {
      std::cout << csv_quote(r.name) << ',' << (r.pass ? 1 : 0) << ',' << csv_quote(r.detail)
                << "\n";
    } else {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

int print_bound(const Scenario& sc, long long horizon, bool csv) {
  bool all_bernoulli = true;
  bool all_normal = true;
  for (const ArmSpec& arm : sc.arms) {
    if (!arm.is_fixed() || arm.kind != ArmSpec::Kind::kIid) {
      all_bernoulli = all_normal = false;
      break;
    }
    all_bernoulli = all_bernoulli && arm.family == RewardModel::Kind::kBernoulli;
    all_normal = all_normal && arm.family == RewardModel::Kind::kNormal;
  }
  if (!all_bernoulli && !all_normal) {
    throw std::invalid_argument(
        "lower bounds are available for all-fixed Bernoulli or all-fixed normal scenarios only");
  }
  std::vector<double> means;
  std::vector<double> stddevs;
  for (const ArmSpec& arm : sc.arms) {
    means.push_back(arm.fixed_mean());
    stddevs.push_back(arm.secondary.value);
  }
  LowerBoundReport report;
  const char* flavor;
  if (all_bernoulli) {
    report = lai_robbins_bound(ExponentialFamily::bernoulli(), means, horizon);
    flavor = "iid Bernoulli rate";
  } else {
    report = burnetas_katehakis_bound(means, stddevs, horizon);
    flavor = "normal unknown-variance rate";
  }
  if (csv) {
    std::cout << "scenario,N,kind,arm,mean,gap,coefficient\n";
    for (const LowerBoundArm& arm : report.arms) {
      std::cout << sc.name << ',' << horizon << ',' << flavor << ',' << arm.arm << ',' << arm.mean
                << ',' << arm.gap << ',' << arm.coefficient << "\n";
    }
    std::cout << sc.name << ',' << horizon << ',' << flavor << ",total,,,"
              << report.total_coefficient << "\n";
    std::cout << sc.name << ',' << horizon << ',' << flavor << ",value,,," << report.value << "\n";
  } else {
    std::cout << "asymptotic regret floor for scenario '" << sc.name << "' at N=" << horizon
              << " (" << flavor << ")\n";
    std::cout << "arm  mean        gap         coefficient\n";
    char line[128];
    for (const LowerBoundArm& arm : report.arms) {
      std::snprintf(line, sizeof(line), "%-4d %-11.6g %-11.6g %-11.6g\n", arm.arm, arm.mean,
                    arm.gap, arm.coefficient);
      std::cout << line;
    }
    std::cout << "total coefficient " << report.total_coefficient << "; floor = coefficient"
              << " * log(N) = " << report.value << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Multi-armed bandit laboratory: subsample-comparison allocation procedures, "
      "classical baselines, and a reproducible Monte Carlo regret harness."};
  app.require_subcommand(1);
  int exit_code = 0;

  // run
  auto* run_cmd = app.add_subcommand("run", "Run a scenario and report regret statistics");
  std::string run_target;
  std::vector<std::string> run_policies;
  long long run_horizon = -1;
  long long run_replications = -1;
  std::uint64_t run_seed = 0;
  std::string run_out;
  int run_threads = 1;
  run_cmd->add_option("scenario", run_target, "Preset name or scenario config file")->required();
  run_cmd->add_option("--policies", run_policies,
                      "Restrict the roster to these policy labels or types");
  run_cmd->add_option("--N", run_horizon, "Override the horizon");
  run_cmd->add_option("--J", run_replications, "Override the replication count");
  auto* run_seed_opt = run_cmd->add_option("--seed", run_seed, "Override the master seed");
  run_cmd->add_option("--out", run_out, "Write the results CSV to this file");
  run_cmd->add_option("--threads", run_threads, "Worker threads (replications in parallel)");
  run_cmd->callback([&]() {
    Scenario sc = resolve_scenario(run_target);
    if (run_horizon > 0) sc.horizon = run_horizon;
    if (run_replications > 0) sc.replications = static_cast<int>(run_replications);
    if (run_seed_opt->count() > 0) sc.master_seed = run_seed;
    filter_roster(sc, run_policies);
    const ExperimentSummary summary = run_experiment(sc, run_threads);
    std::cout << results_table(summary);
    if (!run_out.empty()) {
      std::ofstream out(run_out);
      if (!out) throw std::invalid_argument("cannot write to '" + run_out + "'");
      out << results_csv(summary);
      std::cout << "wrote " << run_out << "\n";
    }
  });

  // list-scenarios
  auto* list_cmd = app.add_subcommand("list-scenarios", "List the built-in scenario presets");
  list_cmd->callback([&]() {
    for (const Scenario& sc : preset_scenarios()) {
      std::cout << sc.name << "  (K=" << sc.arms.size() << ", N=" << sc.horizon
                << ", J=" << sc.replications << ")\n";
      std::cout << "    " << sc.description << "\n    policies:";
      for (const PolicySpec& ps : sc.roster) std::cout << ' ' << ps.label();
      std::cout << "\n";
    }
  });

  // bounds
  auto* bounds_cmd =
      app.add_subcommand("bounds", "Asymptotic regret lower bound for a fixed-arm scenario");
  std::string bounds_target;
  long long bounds_horizon = -1;
  bool bounds_csv = false;
  bounds_cmd->add_option("scenario", bounds_target, "Preset name or scenario config file")
      ->required();
  bounds_cmd->add_option("--N", bounds_horizon, "Horizon for the log(N) factor");
  bounds_cmd->add_flag("--csv", bounds_csv, "Machine-readable output");
  bounds_cmd->callback([&]() {
    const Scenario sc = resolve_scenario(bounds_target);
    exit_code = print_bound(sc, bounds_horizon > 0 ? bounds_horizon : sc.horizon, bounds_csv);
  });

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Numeric checks of the supporting theory");
  std::string check;
  std::uint64_t verify_seed = 20240811;
  int verify_tmax = 50;
  long long verify_n = 1000000;
  int verify_reps = 200;
  bool verify_csv = false;
  verify_cmd->add_option("check", check, "One of: ctj, b2, min1, chernoff, all")->required();
  verify_cmd->add_option("--seed", verify_seed, "Seed for the stochastic checks");
  verify_cmd->add_option("--t-max", verify_tmax, "Largest t for the coefficient inequality");
  verify_cmd->add_option("--n", verify_n, "Sequence length for the window-minimum check");
  verify_cmd->add_option("--reps", verify_reps, "Replications for the stochastic checks");
  verify_cmd->add_flag("--csv", verify_csv, "Machine-readable output");
  verify_cmd->callback([&]() {
    std::vector<VerifierReport> reports;
    if (check == "ctj") {
      reports.push_back(verify_ctj_inequality(verify_tmax));
    } else if (check == "b2") {
      reports.push_back(verify_b2_sweep());
    } else if (check == "min1") {
      const int n2 = static_cast<int>(std::ceil(2.0 * std::log(static_cast<double>(verify_n))));
      RandomStream rng = RandomStream::derive(verify_seed, 0, "min1");
      reports.push_back(verify_min1_asymptotic(verify_n, n2, verify_reps, rng));
    } else if (check == "chernoff") {
      RandomStream rng = RandomStream::derive(verify_seed, 0, "chernoff");
      reports.push_back(
          verify_chisq_chernoff(11, {0.25, 0.5, 0.75, 1.5, 2.0, 3.0}, 20000, rng));
    } else if (check == "all") {
      reports = verify_all(verify_seed);
    } else {
      throw std::invalid_argument("unknown check '" + check +
                                  "'; expected ctj, b2, min1, chernoff or all");
    }
    exit_code = report_verdicts(reports, verify_csv);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
