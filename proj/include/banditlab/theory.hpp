#pragma once

#include <vector>

namespace banditlab {

// One-parameter exponential family tilted from a base density; psi is the
// log normalizer and psi' the mean map, both increasing in theta.
class ExponentialFamily {
 public:
  static ExponentialFamily bernoulli();  // base uniform on {0,1}
  static ExponentialFamily normal_known_sigma(double sigma);

  double psi(double theta) const;
  double psi_prime(double theta) const;
  double theta_from_mean(double mean) const;
  double mean_lower() const;  // open bounds of the achievable mean range
  double mean_upper() const;

 private:
  enum class Kind { kBernoulli, kNormalKnownSigma };
  ExponentialFamily(Kind kind, double sigma) : kind_(kind), sigma_(sigma) {}
  Kind kind_;
  double sigma_;
  friend double rate_function(const ExponentialFamily&, double, double);
};

// (theta_k - theta_star) psi'(theta_k) - psi(theta_k) + psi(theta_star).
double kl_divergence(const ExponentialFamily& family, double theta_k, double theta_star);
double kl_from_means(const ExponentialFamily& family, double mean_k, double mean_star);

// Large-deviation rate of the sample mean at tilt theta_star:
// sup_theta [theta x - psi(theta_star + theta) + psi(theta_star)].
// Closed form; +inf outside the closure of the achievable mean range.
double rate_function(const ExponentialFamily& family, double theta_star, double x);
// Same value through the bracketed one-dimensional search, to 1e-10; x must
// lie strictly inside the achievable range.
double rate_function_bracketed(const ExponentialFamily& family, double theta_star, double x);

// M(g) = log(1 + g^2) / 2, the comparison rate for a normal mean gap of g
// standard deviations.
double gaussian_comparison_rate(double g);

struct LowerBoundArm {
  int arm = 0;
  double mean = 0.0;
  double gap = 0.0;
  double coefficient = 0.0;  // gap over the arm's divergence rate; 0 for best arms
};

// Asymptotic regret floor coefficient * log(horizon).
struct LowerBoundReport {
  std::vector<LowerBoundArm> arms;
  double total_coefficient = 0.0;
  double value = 0.0;
};

LowerBoundReport lai_robbins_bound(const ExponentialFamily& family,
                                   const std::vector<double>& means, long long horizon);
// Normal rewards with per-arm deviations: coefficient gap / M(gap / sigma_k).
LowerBoundReport burnetas_katehakis_bound(const std::vector<double>& means,
                                          const std::vector<double>& stddevs, long long horizon);

}  // namespace banditlab
