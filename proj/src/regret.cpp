#include "banditlab/regret.hpp"

#include <algorithm>
#include <cassert>

namespace banditlab {

double empirical_regret(const std::vector<double>& true_means,
                        const std::vector<long long>& pull_counts) {
  assert(!true_means.empty());
  assert(true_means.size() == pull_counts.size());
  const double best = *std::max_element(true_means.begin(), true_means.end());
  double regret = 0.0;
  for (std::size_t k = 0; k < true_means.size(); ++k) {
    regret += (best - true_means[k]) * static_cast<double>(pull_counts[k]);
  }
  return regret;
}

}  // namespace banditlab
