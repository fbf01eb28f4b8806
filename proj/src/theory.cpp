#include "banditlab/theory.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace banditlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double bern_kl(double p, double q) {
  assert(p >= 0.0 && p <= 1.0 && q > 0.0 && q < 1.0);
  double kl = 0.0;
  if (p > 0.0) kl += p * std::log(p / q);
  if (p < 1.0) kl += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
  return kl;
}

}  // namespace

ExponentialFamily ExponentialFamily::bernoulli() { return {Kind::kBernoulli, 1.0}; }

ExponentialFamily ExponentialFamily::normal_known_sigma(double sigma) {
  assert(sigma > 0.0);
  return {Kind::kNormalKnownSigma, sigma};
}

double ExponentialFamily::psi(double theta) const {
  switch (kind_) {
    case Kind::kBernoulli:
      // log((1 + e^theta) / 2), kept stable for large |theta|.
      return theta > 0.0 ? theta + std::log1p(std::exp(-theta)) - std::log(2.0)
                         : std::log1p(std::exp(theta)) - std::log(2.0);
    case Kind::kNormalKnownSigma:
      return 0.5 * theta * theta * sigma_ * sigma_;
  }
  return 0.0;
}

double ExponentialFamily::psi_prime(double theta) const {
  switch (kind_) {
    case Kind::kBernoulli:
      return 1.0 / (1.0 + std::exp(-theta));
    case Kind::kNormalKnownSigma:
      return theta * sigma_ * sigma_;
  }
  return 0.0;
}

double ExponentialFamily::theta_from_mean(double mean) const {
  switch (kind_) {
    case Kind::kBernoulli:
      assert(mean > 0.0 && mean < 1.0);
      return std::log(mean / (1.0 - mean));
    case Kind::kNormalKnownSigma:
      return mean / (sigma_ * sigma_);
  }
  return 0.0;
}

double ExponentialFamily::mean_lower() const {
  return kind_ == Kind::kBernoulli ? 0.0 : -kInf;
}

double ExponentialFamily::mean_upper() const {
  return kind_ == Kind::kBernoulli ? 1.0 : kInf;
}

double kl_divergence(const ExponentialFamily& family, double theta_k, double theta_star) {
  return (theta_k - theta_star) * family.psi_prime(theta_k) - family.psi(theta_k) +
         family.psi(theta_star);
}

double kl_from_means(const ExponentialFamily& family, double mean_k, double mean_star) {
  return kl_divergence(family, family.theta_from_mean(mean_k), family.theta_from_mean(mean_star));
}

double rate_function(const ExponentialFamily& family, double theta_star, double x) {
  switch (family.kind_) {
    case ExponentialFamily::Kind::kBernoulli: {
      if (x < 0.0 || x > 1.0) return kInf;
      const double mean = family.psi_prime(theta_star);
      if (x == 0.0) return -std::log(1.0 - mean);
      if (x == 1.0) return -std::log(mean);
      return bern_kl(x, mean);
    }
    case ExponentialFamily::Kind::kNormalKnownSigma: {
      const double z = x - family.psi_prime(theta_star);
      return z * z / (2.0 * family.sigma_ * family.sigma_);
    }
  }
  return kInf;
}

double rate_function_bracketed(const ExponentialFamily& family, double theta_star, double x) {
  assert(x > family.mean_lower() && x < family.mean_upper());
  // The supremum sits where psi'(theta_star + theta) = x; psi' is increasing,
  // so expand a bracket around zero, then bisect.
  double lo = -1.0;
  double hi = 1.0;
  for (int i = 0; i < 200 && family.psi_prime(theta_star + lo) > x; ++i) lo *= 2.0;
  for (int i = 0; i < 200 && family.psi_prime(theta_star + hi) < x; ++i) hi *= 2.0;
  while (hi - lo > 1e-12 * std::max(1.0, std::fabs(lo) + std::fabs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (family.psi_prime(theta_star + mid) < x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double theta = 0.5 * (lo + hi);
  return theta * x - family.psi(theta_star + theta) + family.psi(theta_star);
}

double gaussian_comparison_rate(double g) { return 0.5 * std::log1p(g * g); }

namespace {

LowerBoundReport build_report(const std::vector<double>& means,
                              const std::vector<double>& coefficients, long long horizon) {
  LowerBoundReport report;
  double best = means[0];
  for (double m : means) best = std::max(best, m);
  for (std::size_t k = 0; k < means.size(); ++k) {
    report.arms.push_back(
        {static_cast<int>(k), means[k], best - means[k], coefficients[k]});
    report.total_coefficient += coefficients[k];
  }
  report.value = report.total_coefficient * std::log(static_cast<double>(horizon));
  return report;
}

}  // namespace

LowerBoundReport lai_robbins_bound(const ExponentialFamily& family,
                                   const std::vector<double>& means, long long horizon) {
  assert(!means.empty() && horizon >= 2);
  double best = means[0];
  for (double m : means) best = std::max(best, m);
  std::vector<double> coefficients(means.size(), 0.0);
  for (std::size_t k = 0; k < means.size(); ++k) {
    const double gap = best - means[k];
    if (gap > 0.0) coefficients[k] = gap / kl_from_means(family, means[k], best);
  }
  return build_report(means, coefficients, horizon);
}

LowerBoundReport burnetas_katehakis_bound(const std::vector<double>& means,
                                          const std::vector<double>& stddevs, long long horizon) {
  assert(!means.empty() && means.size() == stddevs.size() && horizon >= 2);
  double best = means[0];
  for (double m : means) best = std::max(best, m);
  std::vector<double> coefficients(means.size(), 0.0);
  for (std::size_t k = 0; k < means.size(); ++k) {
    const double gap = best - means[k];
    if (gap > 0.0) {
      assert(stddevs[k] > 0.0);
      coefficients[k] = gap / gaussian_comparison_rate(gap / stddevs[k]);
    }
  }
  return build_report(means, coefficients, horizon);
}

}  // namespace banditlab
