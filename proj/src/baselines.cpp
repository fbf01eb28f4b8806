#include "banditlab/baselines.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>

#include "banditlab/numeric.hpp"

namespace banditlab {
namespace {

long long total_observations(const std::vector<ArmHistory>& arms) {
  long long total = 0;
  for (const ArmHistory& arm : arms) total += arm.count();
  return total;
}

std::vector<double> arm_means(const std::vector<ArmHistory>& arms) {
  std::vector<double> means;
  means.reserve(arms.size());
  for (const ArmHistory& arm : arms) means.push_back(arm.mean());
  return means;
}

std::string format_parameter(const char* key, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(%s=%g)", key, value);
  return buf;
}

}  // namespace

int argmax_index(const std::vector<double>& values) {
  assert(!values.empty());
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(best)]) best = i;
  }
  return best;
}

double ucb1_index(double mean, long long arm_count, long long total_count) {
  assert(arm_count >= 1 && total_count >= arm_count);
  return mean + std::sqrt(2.0 * std::log(static_cast<double>(total_count)) /
                          static_cast<double>(arm_count));
}

double ucb_agrawal_index(double mean, long long arm_count, long long total_count) {
  assert(arm_count >= 1 && total_count >= arm_count);
  const double l1 = std::max(0.0, std::log(static_cast<double>(total_count)));
  const double l2 = l1 > 0.0 ? std::max(0.0, std::log(l1)) : 0.0;
  const double l3 = l2 > 0.0 ? std::max(0.0, std::log(l2)) : 0.0;
  return mean + std::sqrt(2.0 * (l1 + l2 + l3) / static_cast<double>(arm_count));
}

double ucb_lai_index(double mean, long long total_count, long long horizon) {
  assert(total_count >= 1 && horizon >= total_count);
  const double lg =
      std::max(0.0, std::log(static_cast<double>(horizon) / static_cast<double>(total_count)));
  return mean + std::sqrt(2.0 * lg / static_cast<double>(total_count));
}

double ucb1_tuned_index(double mean, double stddev, long long arm_count, long long total_count) {
  assert(arm_count >= 2 && total_count >= arm_count);
  const double per_arm = std::log(static_cast<double>(total_count)) / static_cast<double>(arm_count);
  const double spread = stddev * stddev + std::sqrt(2.0 * per_arm);
  return mean + std::sqrt(per_arm * std::min(0.25, spread));
}

double ucb1_normal_index(double mean, double stddev, long long arm_count, long long total_count) {
  assert(arm_count >= 2 && total_count >= arm_count);
  return mean + 4.0 * stddev *
                    std::sqrt(std::log(static_cast<double>(total_count)) /
                              static_cast<double>(arm_count));
}

double bernoulli_kl(double p, double q) {
  assert(p >= 0.0 && p <= 1.0 && q > 0.0 && q < 1.0);
  double kl = 0.0;
  if (p > 0.0) kl += p * std::log(p / q);
  if (p < 1.0) kl += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
  return kl;
}

double klucb_index(double mean, long long arm_count, double threshold) {
  assert(arm_count >= 1 && threshold >= 0.0);
  assert(mean >= 0.0 && mean <= 1.0);
  if (mean >= 1.0) return 1.0;
  const double n = static_cast<double>(arm_count);
  return monotone_sup([mean, n](double q) { return n * bernoulli_kl(mean, q); }, mean,
                      1.0 - 1e-12, threshold, 1e-10);
}

double klucb_threshold(long long total_count) {
  assert(total_count >= 1);
  const double lg = std::log(static_cast<double>(total_count));
  return lg + 3.0 * std::log(std::max(lg, 1.0));
}

double klucb_plus_threshold(long long total_count, long long arm_count) {
  assert(arm_count >= 1 && total_count >= arm_count);
  return std::log(static_cast<double>(total_count) / static_cast<double>(arm_count));
}

std::vector<double> boltzmann_probabilities(const std::vector<double>& means, double tau) {
  assert(!means.empty() && tau > 0.0);
  const double top = means[static_cast<std::size_t>(argmax_index(means))];
  std::vector<double> probs;
  probs.reserve(means.size());
  double sum = 0.0;
  for (double m : means) {
    const double w = std::exp((m - top) / tau);
    probs.push_back(w);
    sum += w;
  }
  for (double& p : probs) p /= sum;
  return probs;
}

std::string Ucb1Policy::name() const { return "ucb1"; }
void Ucb1Policy::reset(int num_arms, long long /*horizon*/) { assert(num_arms >= 2); }

PolicyDecision Ucb1Policy::decide(const std::vector<ArmHistory>& arms, RandomStream& /*rng*/) {
  const long long total = total_observations(arms);
  std::vector<double> index(arms.size());
  for (std::size_t k = 0; k < arms.size(); ++k) {
    index[k] = ucb1_index(arms[k].mean(), arms[k].count(), total);
  }
  return PolicyDecision{{argmax_index(index)}};
}

std::string UcbAgrawalPolicy::name() const { return "ucb-agrawal"; }
void UcbAgrawalPolicy::reset(int num_arms, long long /*horizon*/) { assert(num_arms >= 2); }

PolicyDecision UcbAgrawalPolicy::decide(const std::vector<ArmHistory>& arms,
                                        RandomStream& /*rng*/) {
  const long long total = total_observations(arms);
  std::vector<double> index(arms.size());
  for (std::size_t k = 0; k < arms.size(); ++k) {
    index[k] = ucb_agrawal_index(arms[k].mean(), arms[k].count(), total);
  }
  return PolicyDecision{{argmax_index(index)}};
}

std::string UcbLaiPolicy::name() const { return "ucb-lai"; }

void UcbLaiPolicy::reset(int num_arms, long long horizon) {
  assert(num_arms >= 2);
  horizon_ = horizon;
}

PolicyDecision UcbLaiPolicy::decide(const std::vector<ArmHistory>& arms, RandomStream& /*rng*/) {
  const long long total = total_observations(arms);
  std::vector<double> index(arms.size());
  for (std::size_t k = 0; k < arms.size(); ++k) {
    index[k] = ucb_lai_index(arms[k].mean(), total, horizon_);
  }
  return PolicyDecision{{argmax_index(index)}};
}

std::string Ucb1TunedPolicy::name() const { return "ucb1-tuned"; }
void Ucb1TunedPolicy::reset(int num_arms, long long /*horizon*/) { assert(num_arms >= 2); }

PolicyDecision Ucb1TunedPolicy::decide(const std::vector<ArmHistory>& arms,
                                       RandomStream& /*rng*/) {
  for (int k = 0; k < static_cast<int>(arms.size()); ++k) {
    if (arms[static_cast<std::size_t>(k)].count() < 2) return PolicyDecision{{k}};
  }
  const long long total = total_observations(arms);
  std::vector<double> index(arms.size());
  for (std::size_t k = 0; k < arms.size(); ++k) {
    index[k] = ucb1_tuned_index(arms[k].mean(), arms[k].stddev(), arms[k].count(), total);
  }
  return PolicyDecision{{argmax_index(index)}};
}

std::string Ucb1NormalPolicy::name() const { return "ucb1-normal"; }
void Ucb1NormalPolicy::reset(int num_arms, long long /*horizon*/) { assert(num_arms >= 2); }

PolicyDecision Ucb1NormalPolicy::decide(const std::vector<ArmHistory>& arms,
                                        RandomStream& /*rng*/) {
  const long long total = total_observations(arms);
  const double forced_below = 8.0 * std::log(static_cast<double>(total));
  int forced = -1;
  for (int k = 0; k < static_cast<int>(arms.size()); ++k) {
    const int nk = arms[static_cast<std::size_t>(k)].count();
    if (static_cast<double>(nk) < forced_below &&
        (forced < 0 || nk < arms[static_cast<std::size_t>(forced)].count())) {
      forced = k;
    }
  }
  if (forced >= 0) return PolicyDecision{{forced}};
  std::vector<double> index(arms.size());
  for (std::size_t k = 0; k < arms.size(); ++k) {
    index[k] = ucb1_normal_index(arms[k].mean(), arms[k].stddev(), arms[k].count(), total);
  }
  return PolicyDecision{{argmax_index(index)}};
}

KlUcbPolicy::KlUcbPolicy(bool per_arm_horizon) : per_arm_horizon_(per_arm_horizon) {}

std::string KlUcbPolicy::name() const { return per_arm_horizon_ ? "kl-ucb-plus" : "kl-ucb"; }
void KlUcbPolicy::reset(int num_arms, long long /*horizon*/) { assert(num_arms >= 2); }

PolicyDecision KlUcbPolicy::decide(const std::vector<ArmHistory>& arms, RandomStream& /*rng*/) {
  const long long total = total_observations(arms);
  std::vector<double> index(arms.size());
  for (std::size_t k = 0; k < arms.size(); ++k) {
    const double threshold = per_arm_horizon_
                                 ? std::max(0.0, klucb_plus_threshold(total, arms[k].count()))
                                 : klucb_threshold(total);
    index[k] = klucb_index(arms[k].mean(), arms[k].count(), threshold);
  }
  return PolicyDecision{{argmax_index(index)}};
}

EpsilonGreedyPolicy::EpsilonGreedyPolicy(double c) : c_(c) { assert(c > 0.0); }

std::string EpsilonGreedyPolicy::name() const { return "epsilon-greedy" + format_parameter("c", c_); }
void EpsilonGreedyPolicy::reset(int num_arms, long long /*horizon*/) { assert(num_arms >= 2); }

PolicyDecision EpsilonGreedyPolicy::decide(const std::vector<ArmHistory>& arms,
                                           RandomStream& rng) {
  const long long total = total_observations(arms);
  const double epsilon = std::min(1.0, 3.0 * c_ / static_cast<double>(total));
  if (rng.next_unit() < epsilon) {
    return PolicyDecision{{static_cast<int>(rng.next_below(arms.size()))}};
  }
  return PolicyDecision{{argmax_index(arm_means(arms))}};
}

BoltzmannPolicy::BoltzmannPolicy(double tau) : tau_(tau) { assert(tau > 0.0); }

std::string BoltzmannPolicy::name() const { return "boltzmann" + format_parameter("tau", tau_); }
void BoltzmannPolicy::reset(int num_arms, long long /*horizon*/) { assert(num_arms >= 2); }

PolicyDecision BoltzmannPolicy::decide(const std::vector<ArmHistory>& arms, RandomStream& rng) {
  const std::vector<double> probs = boltzmann_probabilities(arm_means(arms), tau_);
  const double u = rng.next_unit();
  double cum = 0.0;
  for (int k = 0; k + 1 < static_cast<int>(probs.size()); ++k) {
    cum += probs[static_cast<std::size_t>(k)];
    if (u < cum) return PolicyDecision{{k}};
  }
  return PolicyDecision{{static_cast<int>(probs.size()) - 1}};
}

std::string ThompsonPolicy::name() const { return "thompson"; }
void ThompsonPolicy::reset(int num_arms, long long /*horizon*/) { assert(num_arms >= 2); }

PolicyDecision ThompsonPolicy::decide(const std::vector<ArmHistory>& arms, RandomStream& rng) {
  std::vector<double> draws(arms.size());
  for (std::size_t k = 0; k < arms.size(); ++k) {
    const double successes = arms[k].total_sum();
    const double failures = static_cast<double>(arms[k].count()) - successes;
    draws[k] = rng.beta(1.0 + successes, 1.0 + failures);
  }
  return PolicyDecision{{argmax_index(draws)}};
}

}  // namespace banditlab
