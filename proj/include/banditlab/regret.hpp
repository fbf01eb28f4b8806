#pragma once

#include <cstdint>
#include <vector>

namespace banditlab {

// sum_k (max_j mu_j - mu_k) * counts[k]: expected shortfall of the realized
// allocation against always playing a best arm.
double empirical_regret(const std::vector<double>& true_means,
                        const std::vector<long long>& pull_counts);

// Outcome of one replication.
struct RegretRecord {
  std::vector<double> true_means;       // realized means, one per arm
  std::vector<long long> pull_counts;   // sums to the horizon
  double regret = 0.0;
  std::uint64_t replication = 0;
};

}  // namespace banditlab
