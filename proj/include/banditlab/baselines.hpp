#pragma once

#include <vector>

#include "banditlab/policy.hpp"

namespace banditlab {

// Smallest index attaining the maximum.
int argmax_index(const std::vector<double>& values);

double ucb1_index(double mean, long long arm_count, long long total_count);
// mean + sqrt(2 (log n + log log n + log log log n) / n_k), every nested log
// clamped below at zero.
double ucb_agrawal_index(double mean, long long arm_count, long long total_count);
// mean + sqrt(2 log(horizon / n) / n) with n the total observation count;
// the log is clamped at zero as n approaches the horizon.
double ucb_lai_index(double mean, long long total_count, long long horizon);
// mean + sqrt((log n / n_k) min(1/4, sd^2 + sqrt(2 log n / n_k))).
double ucb1_tuned_index(double mean, double stddev, long long arm_count, long long total_count);
// mean + 4 sd sqrt(log n / n_k).
double ucb1_normal_index(double mean, double stddev, long long arm_count, long long total_count);

double bernoulli_kl(double p, double q);  // q in (0,1)
// sup{q in [mean,1): n_k KL(mean,q) <= threshold}, bisection to 1e-10.
double klucb_index(double mean, long long arm_count, double threshold);
double klucb_threshold(long long total_count);  // log n + 3 log(max(log n, 1))
double klucb_plus_threshold(long long total_count, long long arm_count);  // log(n / n_k)

// softmax(means / tau), largest exponent subtracted first.
std::vector<double> boltzmann_probabilities(const std::vector<double>& means, double tau);

class Ucb1Policy : public Policy {
 public:
  std::string name() const override;
  void reset(int num_arms, long long horizon) override;
  PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) override;
};

class UcbAgrawalPolicy : public Policy {
 public:
  std::string name() const override;
  void reset(int num_arms, long long horizon) override;
  PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) override;
};

class UcbLaiPolicy : public Policy {
 public:
  std::string name() const override;
  void reset(int num_arms, long long horizon) override;
  PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) override;

 private:
  long long horizon_ = 0;
};

// Forces a second observation of any arm seen once, since the deviation
// estimate needs two.
class Ucb1TunedPolicy : public Policy {
 public:
  std::string name() const override;
  void reset(int num_arms, long long horizon) override;
  PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) override;
};

// Plays any arm with n_k < 8 log n first (smallest count, then smallest
// index); that forced phase also guarantees the deviation estimate exists.
class Ucb1NormalPolicy : public Policy {
 public:
  std::string name() const override;
  void reset(int num_arms, long long horizon) override;
  PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) override;
};

// Bernoulli rewards only.
class KlUcbPolicy : public Policy {
 public:
  explicit KlUcbPolicy(bool per_arm_horizon = false);
  std::string name() const override;
  void reset(int num_arms, long long horizon) override;
  PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) override;

 private:
  bool per_arm_horizon_;  // threshold log(n / n_k) instead of log n + 3 log log n
};

// Explores uniformly with probability min(1, 3c / n), else plays the
// greedy arm.
class EpsilonGreedyPolicy : public Policy {
 public:
  explicit EpsilonGreedyPolicy(double c);
  std::string name() const override;
  void reset(int num_arms, long long horizon) override;
  PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) override;

 private:
  double c_;
};

class BoltzmannPolicy : public Policy {
 public:
  explicit BoltzmannPolicy(double tau);
  std::string name() const override;
  void reset(int num_arms, long long horizon) override;
  PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) override;

 private:
  double tau_;
};

// Beta(1 + successes, 1 + failures) posterior sampling; Bernoulli rewards
// only.
class ThompsonPolicy : public Policy {
 public:
  std::string name() const override;
  void reset(int num_arms, long long horizon) override;
  PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) override;
};

}  // namespace banditlab
