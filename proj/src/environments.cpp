#include "banditlab/environments.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "banditlab/numeric.hpp"

namespace banditlab {

RewardModel RewardModel::bernoulli(double p) {
  assert(p >= 0.0 && p <= 1.0);
  return {Kind::kBernoulli, p, 0.0};
}

RewardModel RewardModel::normal(double mean, double stddev) {
  assert(stddev > 0.0);
  return {Kind::kNormal, mean, stddev};
}

RewardModel RewardModel::double_exponential(double location, double scale) {
  assert(scale > 0.0);
  return {Kind::kDoubleExponential, location, scale};
}

RewardModel RewardModel::truncated_exponential(double rate) {
  assert(rate > 0.0);
  return {Kind::kTruncatedExponential, rate, 0.0};
}

RewardModel RewardModel::truncated_poisson(double rate) {
  assert(rate > 0.0);
  return {Kind::kTruncatedPoisson, rate, 0.0};
}

RewardModel RewardModel::uniform(double lo, double hi) {
  assert(lo < hi);
  return {Kind::kUniform, lo, hi};
}

RewardModel RewardModel::constant(double value) { return {Kind::kConstant, value, 0.0}; }

double sample_reward(const RewardModel& model, RandomStream& rng) {
  switch (model.kind) {
    case RewardModel::Kind::kBernoulli:
      return rng.next_unit() < model.a ? 1.0 : 0.0;
    case RewardModel::Kind::kNormal:
      return rng.normal(model.a, model.b);
    case RewardModel::Kind::kDoubleExponential: {
      // Inverse CDF; u = 0 is redrawn so the log stays finite.
      double u;
      do {
        u = rng.next_unit();
      } while (u == 0.0);
      if (u < 0.5) return model.a + model.b * std::log(2.0 * u);
      return model.a - model.b * std::log(2.0 * (1.0 - u));
    }
    case RewardModel::Kind::kTruncatedExponential:
      return std::min(rng.exponential(model.a) / 10.0, 1.0);
    case RewardModel::Kind::kTruncatedPoisson:
      return std::min(static_cast<double>(rng.poisson(model.a)) / 10.0, 1.0);
    case RewardModel::Kind::kUniform:
      return rng.uniform(model.a, model.b);
    case RewardModel::Kind::kConstant:
      return model.a;
  }
  return 0.0;
}

double true_mean(const RewardModel& model) {
  switch (model.kind) {
    case RewardModel::Kind::kBernoulli:
      return model.a;
    case RewardModel::Kind::kNormal:
      return model.a;
    case RewardModel::Kind::kDoubleExponential:
      return model.a;
    case RewardModel::Kind::kTruncatedExponential: {
      const double rate = model.a;
      const double inner = adaptive_simpson(
          [rate](double x) { return x / 10.0 * rate * std::exp(-rate * x); }, 0.0, 10.0, 1e-12);
      return inner + std::exp(-10.0 * rate);
    }
    case RewardModel::Kind::kTruncatedPoisson: {
      const double rate = model.a;
      double pmf = std::exp(-rate);  // P(X = 0)
      double below = pmf;
      double mean = 0.0;
      for (int x = 1; x <= 9; ++x) {
        pmf *= rate / static_cast<double>(x);
        below += pmf;
        mean += x / 10.0 * pmf;
      }
      return mean + (1.0 - below);
    }
    case RewardModel::Kind::kUniform:
      return 0.5 * (model.a + model.b);
    case RewardModel::Kind::kConstant:
      return model.a;
  }
  return 0.0;
}

double doeblin_margin(const std::vector<std::vector<double>>& transition) {
  assert(!transition.empty());
  const std::size_t m = transition.size();
  double margin = 0.0;
  for (std::size_t s = 0; s < m; ++s) {
    double col_min = transition[0][s];
    for (std::size_t r = 1; r < m; ++r) col_min = std::min(col_min, transition[r][s]);
    margin += col_min;
  }
  return margin;
}

namespace {

void check_transition(const std::vector<std::vector<double>>& transition) {
  if (transition.empty()) throw std::invalid_argument("transition matrix is empty");
  const std::size_t m = transition.size();
  for (const auto& row : transition) {
    if (row.size() != m) throw std::invalid_argument("transition matrix is not square");
    double sum = 0.0;
    for (double p : row) {
      if (p < 0.0) throw std::invalid_argument("transition probability is negative");
      sum += p;
    }
    if (std::fabs(sum - 1.0) > 1e-12) throw std::invalid_argument("transition row does not sum to 1");
  }
  if (doeblin_margin(transition) <= 0.0) {
    throw std::invalid_argument("transition matrix has zero Doeblin margin");
  }
}

}  // namespace

std::vector<double> stationary_distribution(const std::vector<std::vector<double>>& transition) {
  check_transition(transition);
  const int m = static_cast<int>(transition.size());
  // Solve (P^T - I) pi = 0 with the last equation replaced by sum(pi) = 1.
  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) a[r][c] = transition[c][r] - (r == c ? 1.0 : 0.0);
  }
  for (int c = 0; c < m; ++c) a[m - 1][c] = 1.0;
  a[m - 1][m] = 1.0;
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int r = col + 1; r < m; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    assert(std::fabs(a[col][col]) > 0.0);
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> pi(m);
  for (int r = 0; r < m; ++r) pi[r] = a[r][m] / a[r][r];
  return pi;
}

double markov_true_mean(const MarkovRewardModel& model) {
  assert(model.emissions.size() == model.transition.size());
  const std::vector<double> pi = stationary_distribution(model.transition);
  double mean = 0.0;
  for (std::size_t s = 0; s < pi.size(); ++s) mean += pi[s] * true_mean(model.emissions[s]);
  return mean;
}

namespace {

int draw_state(const std::vector<double>& probs, RandomStream& rng) {
  const double u = rng.next_unit();
  double cum = 0.0;
  for (std::size_t s = 0; s + 1 < probs.size(); ++s) {
    cum += probs[s];
    if (u < cum) return static_cast<int>(s);
  }
  return static_cast<int>(probs.size()) - 1;
}

}  // namespace

MarkovSampler::MarkovSampler(const MarkovRewardModel& model)
    : model_(&model), stationary_(stationary_distribution(model.transition)) {
  assert(model.emissions.size() == model.transition.size());
}

double MarkovSampler::next(RandomStream& rng) {
  if (state_ < 0) {
    state_ = draw_state(stationary_, rng);
  } else {
    state_ = draw_state(model_->transition[static_cast<std::size_t>(state_)], rng);
  }
  return sample_reward(model_->emissions[static_cast<std::size_t>(state_)], rng);
}

std::vector<double> markov_sample_path(const MarkovRewardModel& model, int length,
                                       RandomStream& rng) {
  assert(length >= 0);
  MarkovSampler sampler(model);
  std::vector<double> path;
  path.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) path.push_back(sampler.next(rng));
  return path;
}

}  // namespace banditlab
