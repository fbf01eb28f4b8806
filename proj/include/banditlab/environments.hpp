#pragma once

#include <vector>

#include "banditlab/rng.hpp"

namespace banditlab {

// I.i.d. reward families. The truncated families draw a nonnegative variate X
// from the named law and emit min(X/10, 1), keeping rewards in [0,1].
struct RewardModel {
  enum class Kind {
    kBernoulli,             // a = p
    kNormal,                // a = mean, b = stddev
    kDoubleExponential,     // a = location, b = scale
    kTruncatedExponential,  // a = rate
    kTruncatedPoisson,      // a = rate
    kUniform,               // a = lo, b = hi
    kConstant,              // a = value; degenerate, mainly for chain emissions
  };
  Kind kind = Kind::kBernoulli;
  double a = 0.0;
  double b = 0.0;

  static RewardModel bernoulli(double p);
  static RewardModel constant(double value);
  static RewardModel normal(double mean, double stddev);
  static RewardModel double_exponential(double location, double scale);
  static RewardModel truncated_exponential(double rate);
  static RewardModel truncated_poisson(double rate);
  static RewardModel uniform(double lo, double hi);
};

double sample_reward(const RewardModel& model, RandomStream& rng);

// Exact expectation of one draw. Closed form where available; the truncated
// exponential integrates its density to 1e-10, the truncated Poisson sums its
// finite support exactly.
double true_mean(const RewardModel& model);

// Finite-state reward chain with a state-dependent emission per state.
// Requires a row-stochastic transition matrix with positive Doeblin margin,
// which makes the stationary law unique. Paths start at stationarity.
struct MarkovRewardModel {
  std::vector<std::vector<double>> transition;
  std::vector<RewardModel> emissions;  // one per state
};

// sum over states s of min over rows r of transition[r][s]. A positive margin
// is the mixing condition under which regret guarantees carry over.
double doeblin_margin(const std::vector<std::vector<double>>& transition);

// Unique pi with pi P = pi and sum(pi) = 1, residual below 1e-10.
// Throws std::invalid_argument for non-stochastic rows or zero margin.
std::vector<double> stationary_distribution(const std::vector<std::vector<double>>& transition);

double markov_true_mean(const MarkovRewardModel& model);

// Sequential sampler: first state drawn from the stationary law, then row
// transitions; one emission per next().
class MarkovSampler {
 public:
  explicit MarkovSampler(const MarkovRewardModel& model);
  double next(RandomStream& rng);

 private:
  const MarkovRewardModel* model_;
  std::vector<double> stationary_;
  int state_ = -1;
};

std::vector<double> markov_sample_path(const MarkovRewardModel& model, int length,
                                       RandomStream& rng);

}  // namespace banditlab
