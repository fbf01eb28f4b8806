#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "banditlab/regret.hpp"
#include "banditlab/scenario.hpp"

namespace banditlab {

// Plays one replication of one roster entry to exactly the scenario horizon
// and returns the realized allocation. Per-replication streams are derived
// from (master seed, replication, purpose), with the purposes "arm-params"
// (shared across the roster, so every policy faces the same drawn arms),
// "rewards/<label>/<arm>", "policy/<label>" and "driver/<label>". The driver
// seeds warm_start observations per arm in arm order, then applies policy
// decisions in full; a decision that would overshoot the horizon is cut to a
// uniformly chosen subset of the required size, applied in ascending arm
// order.
RegretRecord run_replication(const Scenario& scenario, const PolicySpec& policy,
                             std::uint64_t replication);

// One count per edge: bin i spans [edges[i], edges[i+1]) and the last bin is
// open-ended. Values below the first edge land in bin 0 and raise the flag.
std::vector<long long> histogram_counts(const std::vector<double>& values,
                                        const std::vector<double>& edges,
                                        bool* below_range = nullptr);

struct PolicyRunSummary {
  std::string label;
  double mean_regret = 0.0;
  double se_regret = 0.0;  // sample std / sqrt(J); NaN at J = 1
  double worst_regret = 0.0;
  std::vector<long long> histogram;
  bool below_range = false;
  std::vector<double> mean_pull_counts;  // per arm
  std::vector<double> regrets;           // per replication, in replication order
};

struct ExperimentSummary {
  std::string scenario;
  long long horizon = 0;
  int replications = 0;
  std::uint64_t master_seed = 0;
  std::vector<double> bin_edges;
  std::vector<PolicyRunSummary> policies;
};

// Runs every roster entry for the scenario's replication count. Replications
// are the unit of parallelism; results are aggregated in replication order,
// so any worker count produces the identical summary.
ExperimentSummary run_experiment(const Scenario& scenario, int num_threads = 1);

// Mean pulls of each inferior arm against the asymptotic allocation ratio.
// limit = 1 / D(arm | best) for fixed Bernoulli scenarios, NaN otherwise
// (ratio still reported). Requires fixed arms.
struct EfficiencyRow {
  long long horizon = 0;
  int arm = 0;
  double mean_pulls = 0.0;
  double ratio = 0.0;  // mean_pulls / log(horizon)
  double limit = 0.0;
};

std::vector<EfficiencyRow> efficiency_diagnostic(const Scenario& scenario,
                                                 const PolicySpec& policy,
                                                 const std::vector<long long>& horizons,
                                                 int replications, int num_threads = 1);

// One row per roster entry:
// scenario,policy,N,J,seed,mean_regret,se_regret,worst_regret,bin_0,...,bin_B
std::string results_csv(const ExperimentSummary& summary);
// Plain-text table of the same numbers.
std::string results_table(const ExperimentSummary& summary);

}  // namespace banditlab
