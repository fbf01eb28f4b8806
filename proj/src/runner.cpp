#include "banditlab/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <sstream>
#include <thread>

#include "banditlab/baselines.hpp"

namespace banditlab {

namespace {

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

RegretRecord run_replication(const Scenario& sc, const PolicySpec& ps, std::uint64_t replication) {
  const int num_arms = static_cast<int>(sc.arms.size());
  const std::string label = ps.label();

  // Arm parameters first, from the roster-independent stream.
  RandomStream param_stream = RandomStream::derive(sc.master_seed, replication, "arm-params");
  std::vector<RewardModel> models(static_cast<std::size_t>(num_arms));
  std::vector<std::unique_ptr<MarkovSampler>> chains(static_cast<std::size_t>(num_arms));
  std::vector<double> means(static_cast<std::size_t>(num_arms));
  for (int k = 0; k < num_arms; ++k) {
    const ArmSpec& arm = sc.arms[static_cast<std::size_t>(k)];
    if (arm.kind == ArmSpec::Kind::kMarkov) {
      chains[static_cast<std::size_t>(k)] = std::make_unique<MarkovSampler>(arm.markov);
      means[static_cast<std::size_t>(k)] = markov_true_mean(arm.markov);
    } else {
      models[static_cast<std::size_t>(k)] = arm.realize(param_stream);
      means[static_cast<std::size_t>(k)] = true_mean(models[static_cast<std::size_t>(k)]);
    }
  }

  std::vector<RandomStream> reward_streams;
  reward_streams.reserve(static_cast<std::size_t>(num_arms));
  for (int k = 0; k < num_arms; ++k) {
    reward_streams.push_back(
        RandomStream::derive(sc.master_seed, replication, "rewards/" + label + "/" + std::to_string(k)));
  }
  RandomStream policy_stream = RandomStream::derive(sc.master_seed, replication, "policy/" + label);
  RandomStream driver_stream = RandomStream::derive(sc.master_seed, replication, "driver/" + label);

  std::unique_ptr<Policy> policy = make_policy(ps);
  policy->reset(num_arms, sc.horizon);

  std::vector<ArmHistory> histories(static_cast<std::size_t>(num_arms));
  std::vector<long long> counts(static_cast<std::size_t>(num_arms), 0);
  long long used = 0;
  auto pull = [&](int k) {
    const std::size_t uk = static_cast<std::size_t>(k);
    const double reward = chains[uk] ? chains[uk]->next(reward_streams[uk])
                                     : sample_reward(models[uk], reward_streams[uk]);
    histories[uk].add(reward);
    ++counts[uk];
    ++used;
  };

  for (int round = 0; round < ps.warm_start; ++round) {
    for (int k = 0; k < num_arms; ++k) pull(k);
  }
  assert(used <= sc.horizon);  // guaranteed by validate_scenario

  while (used < sc.horizon) {
    PolicyDecision decision = policy->decide(histories, policy_stream);
    assert(!decision.arms.empty());
    const long long remaining = sc.horizon - used;
    if (static_cast<long long>(decision.arms.size()) <= remaining) {
      for (int k : decision.arms) pull(k);
      continue;
    }
    // Keep a uniform subset of the required size; apply in ascending order.
    std::vector<int>& chosen = decision.arms;
    for (long long i = 0; i < remaining; ++i) {
      const std::uint64_t span = static_cast<std::uint64_t>(chosen.size()) - static_cast<std::uint64_t>(i);
      const std::size_t j = static_cast<std::size_t>(i) + static_cast<std::size_t>(driver_stream.next_below(span));
      std::swap(chosen[static_cast<std::size_t>(i)], chosen[j]);
    }
    chosen.resize(static_cast<std::size_t>(remaining));
    std::sort(chosen.begin(), chosen.end());
    for (int k : chosen) pull(k);
  }

  RegretRecord record;
  record.true_means = std::move(means);
  record.pull_counts = std::move(counts);
  record.regret = empirical_regret(record.true_means, record.pull_counts);
  record.replication = replication;
  return record;
}

std::vector<long long> histogram_counts(const std::vector<double>& values,
                                        const std::vector<double>& edges, bool* below_range) {
  assert(edges.size() >= 2);
  std::vector<long long> counts(edges.size(), 0);
  bool below = false;
  for (double v : values) {
    if (v < edges.front()) {
      ++counts.front();
      below = true;
      continue;
    }
    const auto it = std::upper_bound(edges.begin(), edges.end(), v);
    const std::size_t bin = static_cast<std::size_t>(it - edges.begin()) - 1;
    ++counts[bin];
  }
  if (below_range != nullptr) *below_range = below;
  return counts;
}

ExperimentSummary run_experiment(const Scenario& sc, int num_threads) {
  validate_scenario(sc);
  const int replications = sc.replications;

  ExperimentSummary summary;
  summary.scenario = sc.name;
  summary.horizon = sc.horizon;
  summary.replications = replications;
  summary.master_seed = sc.master_seed;
  summary.bin_edges = sc.bin_edges;

  for (const PolicySpec& ps : sc.roster) {
    std::vector<RegretRecord> records(static_cast<std::size_t>(replications));
    const int workers = std::max(1, std::min(num_threads, replications));
    if (workers == 1) {
      for (int i = 0; i < replications; ++i) {
        records[static_cast<std::size_t>(i)] = run_replication(sc, ps, static_cast<std::uint64_t>(i));
      }
    } else {
      std::atomic<int> next{0};
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
          try {
            for (;;) {
              const int i = next.fetch_add(1);
              if (i >= replications) break;
              records[static_cast<std::size_t>(i)] =
                  run_replication(sc, ps, static_cast<std::uint64_t>(i));
            }
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
          }
        });
      }
      for (std::thread& t : pool) t.join();
      for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }

    // Aggregation reads the records in replication order, so the summary does
    // not depend on the worker count.
    PolicyRunSummary out;
    out.label = ps.label();
    out.regrets.reserve(records.size());
    for (const RegretRecord& r : records) out.regrets.push_back(r.regret);
    double sum = 0.0;
    for (double r : out.regrets) sum += r;
    out.mean_regret = sum / replications;
    if (replications > 1) {
      double sq = 0.0;
      for (double r : out.regrets) sq += (r - out.mean_regret) * (r - out.mean_regret);
      out.se_regret = std::sqrt(sq / (replications - 1)) / std::sqrt(static_cast<double>(replications));
    } else {
      out.se_regret = std::numeric_limits<double>::quiet_NaN();
    }
    out.worst_regret = *std::max_element(out.regrets.begin(), out.regrets.end());
    out.histogram = histogram_counts(out.regrets, sc.bin_edges, &out.below_range);
    out.mean_pull_counts.assign(sc.arms.size(), 0.0);
    for (const RegretRecord& r : records) {
      for (std::size_t k = 0; k < r.pull_counts.size(); ++k) {
        out.mean_pull_counts[k] += static_cast<double>(r.pull_counts[k]);
      }
    }
    for (double& m : out.mean_pull_counts) m /= replications;
    summary.policies.push_back(std::move(out));
  }
  return summary;
}

std::vector<EfficiencyRow> efficiency_diagnostic(const Scenario& sc, const PolicySpec& ps,
                                                 const std::vector<long long>& horizons,
                                                 int replications, int num_threads) {
  for (const ArmSpec& arm : sc.arms) {
    if (!arm.is_fixed()) {
      throw std::invalid_argument("efficiency diagnostic needs fixed arm parameters");
    }
  }
  std::vector<double> means;
  means.reserve(sc.arms.size());
  bool all_bernoulli = true;
  for (const ArmSpec& arm : sc.arms) {
    means.push_back(arm.fixed_mean());
    all_bernoulli = all_bernoulli && arm.kind == ArmSpec::Kind::kIid &&
                    arm.family == RewardModel::Kind::kBernoulli;
  }
  const double best = *std::max_element(means.begin(), means.end());

  std::vector<EfficiencyRow> rows;
  for (long long horizon : horizons) {
    Scenario run = sc;
    run.horizon = horizon;
    run.replications = replications;
    run.roster = {ps};
    const ExperimentSummary summary = run_experiment(run, num_threads);
    const PolicyRunSummary& p = summary.policies.front();
    for (std::size_t k = 0; k < means.size(); ++k) {
      if (!(means[k] < best)) continue;
      EfficiencyRow row;
      row.horizon = horizon;
      row.arm = static_cast<int>(k);
      row.mean_pulls = p.mean_pull_counts[k];
      row.ratio = row.mean_pulls / std::log(static_cast<double>(horizon));
      row.limit = all_bernoulli && best < 1.0 ? 1.0 / bernoulli_kl(means[k], best)
                                              : std::numeric_limits<double>::quiet_NaN();
      rows.push_back(row);
    }
  }
  return rows;
}

std::string results_csv(const ExperimentSummary& summary) {
  std::ostringstream out;
  out << "scenario,policy,N,J,seed,mean_regret,se_regret,worst_regret";
  for (std::size_t b = 0; b < summary.bin_edges.size(); ++b) out << ",bin_" << b;
  out << "\n";
  for (const PolicyRunSummary& p : summary.policies) {
    out << summary.scenario << ',' << p.label << ',' << summary.horizon << ','
        << summary.replications << ',' << summary.master_seed << ',' << fmt_g(p.mean_regret) << ','
        << fmt_g(p.se_regret) << ',' << fmt_g(p.worst_regret);
    for (long long c : p.histogram) out << ',' << c;
    out << "\n";
  }
  return out.str();
}

std::string results_table(const ExperimentSummary& summary) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "scenario %s  N=%lld  J=%d  seed=%llu\n",
                summary.scenario.c_str(), summary.horizon, summary.replications,
                static_cast<unsigned long long>(summary.master_seed));
  out << line;
  std::snprintf(line, sizeof(line), "%-28s %14s %10s %14s\n", "policy", "mean_regret", "se",
                "worst");
  out << line;
  for (const PolicyRunSummary& p : summary.policies) {
    std::snprintf(line, sizeof(line), "%-28s %14.4f %10.4f %14.4f\n", p.label.c_str(),
                  p.mean_regret, p.se_regret, p.worst_regret);
    out << line;
  }
  out << "histogram edges:";
  for (double e : summary.bin_edges) out << ' ' << fmt_g(e);
  out << " (last bin open-ended)\n";
  for (const PolicyRunSummary& p : summary.policies) {
    out << "  " << p.label << ":";
    for (long long c : p.histogram) out << ' ' << c;
    if (p.below_range) out << "  [includes values below the first edge]";
    out << "\n";
  }
  return out.str();
}

}  // namespace banditlab
