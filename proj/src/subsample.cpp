#include "banditlab/subsample.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace banditlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

double sqrt_log_floor(long long total_observations) {
  assert(total_observations >= 1);
  if (total_observations <= 1) return 0.0;
  return std::sqrt(std::log(static_cast<double>(total_observations)));
}

double studentized(double x, double sd) {
  assert(sd >= 0.0);
  if (sd > 0.0) return x / sd;
  if (x > 0.0) return kInf;
  if (x < 0.0) return -kInf;
  return 0.0;
}

int select_leader(const std::vector<ArmHistory>& arms, int previous_leader, RandomStream& rng) {
  assert(!arms.empty());
  int max_count = 0;
  for (const ArmHistory& arm : arms) max_count = std::max(max_count, arm.count());
  assert(max_count >= 1);
  double best_mean = -kInf;
  for (const ArmHistory& arm : arms) {
    if (arm.count() == max_count) best_mean = std::max(best_mean, arm.mean());
  }
  std::vector<int> ties;
  for (int k = 0; k < static_cast<int>(arms.size()); ++k) {
    if (arms[k].count() == max_count && arms[k].mean() == best_mean) ties.push_back(k);
  }
  if (previous_leader >= 0 &&
      std::find(ties.begin(), ties.end(), previous_leader) != ties.end()) {
    return previous_leader;
  }
  if (ties.size() == 1) return ties[0];
  return ties[static_cast<std::size_t>(rng.next_below(ties.size()))];
}

bool ssmc_challenge(const ArmHistory& leader, const ArmHistory& challenger,
                    double exploration_floor) {
  const int nl = leader.count();
  const int nk = challenger.count();
  assert(nk >= 1 && nk <= nl);
  if (nk == nl) return false;
  if (nk < exploration_floor) return true;
  const double challenger_mean = challenger.mean();
  for (int t = 1; t + nk - 1 <= nl; ++t) {
    if (challenger_mean >= leader.window_mean(t, t + nk - 1)) return true;
  }
  return false;
}

bool ssmc_star_challenge(const ArmHistory& leader, const ArmHistory& challenger,
                         double exploration_floor) {
  const int nl = leader.count();
  const int nk = challenger.count();
  assert(nk >= 1 && nk <= nl);
  if (nk == nl) return false;
  if (nk < exploration_floor) return true;
  const double challenger_mean = challenger.mean();
  for (int t = 1; t + nk - 1 <= nl; t += nk) {
    if (challenger_mean >= leader.window_mean(t, t + nk - 1)) return true;
  }
  return false;
}

bool sstc_challenge(const ArmHistory& leader, const ArmHistory& challenger,
                    double exploration_floor) {
  const int nl = leader.count();
  const int nk = challenger.count();
  assert(nk >= 1 && nk <= nl);
  if (nk == nl) return false;
  if (nk < std::max(exploration_floor, 2.0)) return true;
  const double leader_mean = leader.mean();
  const double challenger_mean = challenger.mean();
  if (challenger_mean >= leader_mean) return true;
  const double lhs = studentized(challenger_mean - leader_mean, challenger.stddev());
  for (int t = 1; t + nk - 1 <= nl; ++t) {
    const int u = t + nk - 1;
    const double rhs =
        studentized(leader.window_mean(t, u) - leader_mean, leader.window_stddev(t, u));
    if (lhs >= rhs) return true;
  }
  return false;
}

void WindowMinCache::reset(int length, int stride) {
  assert(length >= 1 && stride >= 1);
  length_ = length;
  stride_ = stride;
  covered_ = 0;
  min_ = kInf;
}

long long WindowMinCache::fold(const ArmHistory& leader) {
  assert(length_ >= 1);
  const int nl = leader.count();
  if (nl < length_) return 0;
  const long long available = (nl - length_) / stride_ + 1;
  long long folded = 0;
  for (long long w = covered_; w < available; ++w) {
    const int t = static_cast<int>(1 + w * stride_);
    min_ = std::min(min_, leader.window_mean(t, t + length_ - 1));
    ++folded;
  }
  covered_ = available;
  return folded;
}

double WindowMinCache::min_mean() const {
  assert(covered_ > 0);
  return min_;
}

void StudentizedRegionCache::reset(int length, double challenger_mean, double challenger_sd) {
  assert(length >= 1);
  length_ = length;
  covered_ = 0;
  chall_mean_ = challenger_mean;
  chall_sd_ = challenger_sd;
  always_ = false;
  upper_ = -kInf;
  upper_closed_ = false;
  lower_ = kInf;
  lower_closed_ = false;
}

long long StudentizedRegionCache::fold(const ArmHistory& leader) {
  assert(length_ >= 2);  // window deviations need two observations
  const int nl = leader.count();
  if (nl < length_) return 0;
  const long long available = nl - length_ + 1;
  long long folded = 0;
  for (long long w = covered_; w < available; ++w) {
    const int t = static_cast<int>(1 + w);
    const int u = t + length_ - 1;
    add_window(leader.window_mean(t, u), leader.window_stddev(t, u));
    ++folded;
  }
  covered_ = available;
  return folded;
}

bool StudentizedRegionCache::wins(double leader_mean) const {
  if (always_) return true;
  if (leader_mean < upper_ || (upper_closed_ && leader_mean == upper_)) return true;
  if (leader_mean > lower_ || (lower_closed_ && leader_mean == lower_)) return true;
  return false;
}

// Solving (a - m) / c >= (w - m) / s for m splits into a half-line whose side
// depends on which deviation is larger; zero deviations fall back to the
// extended-real comparison and may contribute open endpoints.
void StudentizedRegionCache::add_window(double w, double s) {
  const double a = chall_mean_;
  const double c = chall_sd_;
  if (c > 0.0 && s > 0.0) {
    if (s > c) {
      merge_upper((a * s - w * c) / (s - c), true);
    } else if (s < c) {
      merge_lower((a * s - w * c) / (s - c), true);
    } else if (a >= w) {
      always_ = true;
    }
  } else if (c == 0.0 && s > 0.0) {
    merge_upper(a, w <= a);
  } else if (c > 0.0 && s == 0.0) {
    merge_lower(w, a >= w);
  } else {
    if (a >= w) {
      always_ = true;
    } else {
      merge_upper(a, false);
      merge_lower(w, false);
    }
  }
}

void StudentizedRegionCache::merge_upper(double t, bool closed) {
  if (t > upper_) {
    upper_ = t;
    upper_closed_ = closed;
  } else if (t == upper_ && closed) {
    upper_closed_ = true;
  }
}

void StudentizedRegionCache::merge_lower(double t, bool closed) {
  if (t < lower_) {
    lower_ = t;
    lower_closed_ = closed;
  } else if (t == lower_ && closed) {
    lower_closed_ = true;
  }
}

namespace {

// Uniform without-replacement subsample mean of `size` of the leader's
// observations. Partial Floyd sampling on whichever of the subsample or its
// complement is smaller.
double subsample_mean(const ArmHistory& history, int size, RandomStream& rng) {
  const int n = history.count();
  assert(size >= 1 && size <= n);
  if (size == n) return history.mean();
  const bool complement = 2 * size > n;
  const int pick = complement ? n - size : size;
  std::unordered_set<int> member;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(pick));
  member.reserve(static_cast<std::size_t>(pick) * 2);
  for (int j = n - pick; j < n; ++j) {
    const int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(j) + 1));
    if (member.insert(t).second) {
      chosen.push_back(t);
    } else {
      member.insert(j);
      chosen.push_back(j);
    }
  }
  double sum = 0.0;
  for (int i : chosen) sum += history.reward(i + 1);
  if (complement) sum = history.total_sum() - sum;
  return sum / static_cast<double>(size);
}

}  // namespace

int besa_duel(const std::vector<ArmHistory>& arms, int first, int second, RandomStream& rng) {
  assert(first != second);
  int challenger = first;
  int defender = second;
  if (arms[challenger].count() > arms[defender].count() ||
      (arms[challenger].count() == arms[defender].count() && challenger > defender)) {
    std::swap(challenger, defender);
  }
  const int nk = arms[challenger].count();
  const double defender_mean = nk == arms[defender].count()
                                   ? arms[defender].mean()
                                   : subsample_mean(arms[defender], nk, rng);
  return arms[challenger].mean() >= defender_mean ? challenger : defender;
}

int besa_round_winner(const std::vector<ArmHistory>& arms, RandomStream& rng) {
  const int num_arms = static_cast<int>(arms.size());
  assert(num_arms >= 2);
  std::vector<int> order(static_cast<std::size_t>(num_arms));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  while (order.size() > 1) {
    std::vector<int> next;
    next.reserve(order.size() / 2 + 1);
    for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
      next.push_back(besa_duel(arms, order[i], order[i + 1], rng));
    }
    if (order.size() % 2 == 1) next.push_back(order.back());
    order.swap(next);
  }
  return order[0];
}

SsmcPolicy::SsmcPolicy(bool disjoint_blocks, ExplorationFloor floor)
    : disjoint_blocks_(disjoint_blocks), floor_(std::move(floor)) {}

std::string SsmcPolicy::name() const { return disjoint_blocks_ ? "ssmc-star" : "ssmc"; }

void SsmcPolicy::reset(int num_arms, long long /*horizon*/) {
  assert(num_arms >= 2);
  leader_ = -1;
  caches_.assign(static_cast<std::size_t>(num_arms), WindowMinCache());
  window_evals_ = 0;
}

PolicyDecision SsmcPolicy::decide(const std::vector<ArmHistory>& arms, RandomStream& rng) {
  long long total = 0;
  for (const ArmHistory& arm : arms) total += arm.count();
  const double floor = floor_(total);
  const int leader = select_leader(arms, leader_, rng);
  if (leader != leader_) {
    for (WindowMinCache& cache : caches_) cache = WindowMinCache();
    leader_ = leader;
  }
  const int nl = arms[static_cast<std::size_t>(leader)].count();
  PolicyDecision decision;
  for (int k = 0; k < static_cast<int>(arms.size()); ++k) {
    if (k == leader) continue;
    const int nk = arms[static_cast<std::size_t>(k)].count();
    assert(nk <= nl);
    bool win;
    if (nk == nl) {
      win = false;
    } else if (nk < floor) {
      win = true;
    } else {
      WindowMinCache& cache = caches_[static_cast<std::size_t>(k)];
      if (cache.length() != nk) cache.reset(nk, disjoint_blocks_ ? nk : 1);
      window_evals_ += cache.fold(arms[static_cast<std::size_t>(leader)]);
      win = arms[static_cast<std::size_t>(k)].mean() >= cache.min_mean();
    }
    if (win) decision.arms.push_back(k);
  }
  if (decision.arms.empty()) decision.arms.push_back(leader);
  return decision;
}

SstcPolicy::SstcPolicy(ExplorationFloor floor) : floor_(std::move(floor)) {}

std::string SstcPolicy::name() const { return "sstc"; }

void SstcPolicy::reset(int num_arms, long long /*horizon*/) {
  assert(num_arms >= 2);
  leader_ = -1;
  caches_.assign(static_cast<std::size_t>(num_arms), StudentizedRegionCache());
  cache_chall_counts_.assign(static_cast<std::size_t>(num_arms), -1);
  window_evals_ = 0;
}

PolicyDecision SstcPolicy::decide(const std::vector<ArmHistory>& arms, RandomStream& rng) {
  long long total = 0;
  for (const ArmHistory& arm : arms) total += arm.count();
  const double floor = std::max(floor_(total), 2.0);
  const int leader = select_leader(arms, leader_, rng);
  if (leader != leader_) {
    std::fill(cache_chall_counts_.begin(), cache_chall_counts_.end(), -1);
    leader_ = leader;
  }
  const ArmHistory& leader_arm = arms[static_cast<std::size_t>(leader)];
  const int nl = leader_arm.count();
  const double leader_mean = leader_arm.mean();
  PolicyDecision decision;
  for (int k = 0; k < static_cast<int>(arms.size()); ++k) {
    if (k == leader) continue;
    const ArmHistory& arm = arms[static_cast<std::size_t>(k)];
    const int nk = arm.count();
    assert(nk <= nl);
    bool win;
    if (nk == nl) {
      win = false;
    } else if (nk < floor) {
      win = true;
    } else {
      StudentizedRegionCache& cache = caches_[static_cast<std::size_t>(k)];
      if (cache_chall_counts_[static_cast<std::size_t>(k)] != nk) {
        cache.reset(nk, arm.mean(), arm.stddev());
        cache_chall_counts_[static_cast<std::size_t>(k)] = nk;
      }
      window_evals_ += cache.fold(leader_arm);
      win = arm.mean() >= leader_mean || cache.wins(leader_mean);
    }
    if (win) decision.arms.push_back(k);
  }
  if (decision.arms.empty()) decision.arms.push_back(leader);
  return decision;
}

std::string BesaPolicy::name() const { return "besa"; }

void BesaPolicy::reset(int num_arms, long long /*horizon*/) { assert(num_arms >= 2); }

PolicyDecision BesaPolicy::decide(const std::vector<ArmHistory>& arms, RandomStream& rng) {
  return PolicyDecision{{besa_round_winner(arms, rng)}};
}

}  // namespace banditlab
