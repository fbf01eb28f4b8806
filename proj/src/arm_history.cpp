#include "banditlab/arm_history.hpp"

#include <cassert>
#include <cmath>

namespace banditlab {

void ArmHistory::add(double reward) {
  rewards_.push_back(reward);
  prefix_.push_back(prefix_.back() + reward);
  prefix_sq_.push_back(prefix_sq_.back() + reward * reward);
}

double ArmHistory::reward(int i) const {
  assert(i >= 1 && i <= count());
  return rewards_[static_cast<std::size_t>(i) - 1];
}

double ArmHistory::window_sum(int t, int u) const {
  assert(t >= 1 && t <= u && u <= count());
  return prefix_[static_cast<std::size_t>(u)] - prefix_[static_cast<std::size_t>(t) - 1];
}

double ArmHistory::window_mean(int t, int u) const {
  return window_sum(t, u) / static_cast<double>(u - t + 1);
}

double ArmHistory::window_stddev(int t, int u) const {
  assert(t >= 1 && t < u && u <= count());
  const double len = static_cast<double>(u - t + 1);
  const double sum = window_sum(t, u);
  const double sum_sq =
      prefix_sq_[static_cast<std::size_t>(u)] - prefix_sq_[static_cast<std::size_t>(t) - 1];
  const double m2 = sum_sq - sum * sum / len;
  if (m2 <= 0.0) return 0.0;
  return std::sqrt(m2 / (len - 1.0));
}

}  // namespace banditlab
