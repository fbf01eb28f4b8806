#pragma once

#include <vector>

namespace banditlab {

// Observation log for a single arm. Prefix sums of rewards and squared
// rewards give O(1) means and standard deviations over any window.
//
// Observation positions are 1-based: window (t, u) covers observations
// t, t+1, ..., u with 1 <= t <= u <= count().
class ArmHistory {
 public:
  void add(double reward);

  int count() const { return static_cast<int>(rewards_.size()); }
  double reward(int i) const;  // 1-based

  double window_sum(int t, int u) const;
  double window_mean(int t, int u) const;
  // Unbiased standard deviation over the window; requires u > t.
  // Negative variance from rounding is clamped to zero.
  double window_stddev(int t, int u) const;

  double total_sum() const { return prefix_[rewards_.size()]; }
  double mean() const { return window_mean(1, count()); }
  double stddev() const { return window_stddev(1, count()); }

 private:
  std::vector<double> rewards_;
  std::vector<double> prefix_ = {0.0};     // prefix_[i] = sum of first i rewards
  std::vector<double> prefix_sq_ = {0.0};  // prefix_sq_[i] = sum of first i squares
};

}  // namespace banditlab
