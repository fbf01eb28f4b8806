#pragma once

#include <functional>
#include <vector>

#include "banditlab/policy.hpp"

namespace banditlab {

// Exploration floor: a challenger holding fewer than floor(n) observations
// wins its challenge outright, n being the total observation count at the
// start of the round. sqrt(log n), zero at n <= 1; nondecreasing.
double sqrt_log_floor(long long total_observations);

using ExplorationFloor = std::function<double(long long)>;

// x / sd on the extended real line: sd = 0 maps to +inf, -inf or 0 by the
// sign of x, so zero-variance samples still compare deterministically.
double studentized(double x, double sd);

// Leader of a round: an arm with the most observations; count ties go to the
// larger full-sample mean; remaining ties keep previous_leader when eligible,
// otherwise one is drawn uniformly. previous_leader < 0 means none.
int select_leader(const std::vector<ArmHistory>& arms, int previous_leader, RandomStream& rng);

// One challenge against the leader, scanning every leader window of the
// challenger's length (start offsets t = 1, 2, ...). An equal-size challenger
// loses outright; an undersampled one (count below exploration_floor) wins
// outright; otherwise the challenger wins when its full mean reaches the
// minimum leader window mean.
bool ssmc_challenge(const ArmHistory& leader, const ArmHistory& challenger,
                    double exploration_floor);

// Same outer rules, but windows only at disjoint block offsets
// t = 1 + u * n_k, so each scan touches floor(n_leader / n_k) blocks.
bool ssmc_star_challenge(const ArmHistory& leader, const ArmHistory& challenger,
                         double exploration_floor);

// Studentized variant. The challenger wins outright when its count is below
// max(exploration_floor, 2), since its deviation needs two observations.
// Otherwise it wins when its full mean reaches the leader's full mean, or
// when for some window (Y_k - m) / sd_k >= (Y_w - m) / sd_w with m the
// leader's full mean and sd the unbiased window deviations (extended reals
// via studentized()).
bool sstc_challenge(const ArmHistory& leader, const ArmHistory& challenger,
                    double exploration_floor);

// Running minimum of leader window means at a fixed window length and start
// stride. Valid while the leader identity and the window length hold; fold()
// absorbs newly completed windows only, so a persisting leader costs one
// window per round (stride 1).
class WindowMinCache {
 public:
  void reset(int length, int stride);
  // Folds windows not yet covered; returns how many window means were read.
  long long fold(const ArmHistory& leader);
  int length() const { return length_; }
  bool empty() const { return covered_ == 0; }
  double min_mean() const;

 private:
  int length_ = 0;
  int stride_ = 1;
  long long covered_ = 0;  // windows folded so far
  double min_ = 0.0;
};

// Winning region, in the leader's full mean m, of the studentized comparison
// accumulated over leader windows at a fixed challenger size. Each window
// contributes a half-line in m, so the union stays two half-lines plus an
// "always" flag; checking a round is O(1) once the new windows are folded.
class StudentizedRegionCache {
 public:
  // Fixes the challenger statistics the region is built against.
  void reset(int length, double challenger_mean, double challenger_sd);
  long long fold(const ArmHistory& leader);
  int length() const { return length_; }
  // True when the comparison holds for some covered window at leader mean m.
  bool wins(double leader_mean) const;

 private:
  void add_window(double w, double s);
  void merge_upper(double t, bool closed);
  void merge_lower(double t, bool closed);

  int length_ = 0;
  long long covered_ = 0;
  double chall_mean_ = 0.0;
  double chall_sd_ = 0.0;
  bool always_ = false;
  double upper_;
  bool upper_closed_ = false;
  double lower_;
  bool lower_closed_ = false;
};

// One duel: the arm with more observations defends with a uniform
// without-replacement subsample of the smaller arm's size; on equal counts
// the lower index plays the challenger role and the full samples face off.
// The challenger wins ties. Returns the winning arm index.
int besa_duel(const std::vector<ArmHistory>& arms, int first, int second, RandomStream& rng);

// Single-elimination bracket over all arms, freshly shuffled each call; an
// odd arm out receives a bye. Returns the surviving arm.
int besa_round_winner(const std::vector<ArmHistory>& arms, RandomStream& rng);

// Round allocation built on a challenge rule: every arm challenges the
// leader, all winning challengers are sampled, or the leader alone when none
// win. Incremental caches make a persisting leader cost O(1) per challenger
// per round; window_evals() counts window means read, for cost accounting.
class SsmcPolicy : public Policy {
 public:
  explicit SsmcPolicy(bool disjoint_blocks = false,
                      ExplorationFloor floor = sqrt_log_floor);
  std::string name() const override;
  void reset(int num_arms, long long horizon) override;
  PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) override;
  long long window_evals() const { return window_evals_; }
  int current_leader() const { return leader_; }

 private:
  bool disjoint_blocks_;
  ExplorationFloor floor_;
  int leader_ = -1;
  std::vector<WindowMinCache> caches_;
  long long window_evals_ = 0;
};

class SstcPolicy : public Policy {
 public:
  explicit SstcPolicy(ExplorationFloor floor = sqrt_log_floor);
  std::string name() const override;
  void reset(int num_arms, long long horizon) override;
  PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) override;
  long long window_evals() const { return window_evals_; }

 private:
  ExplorationFloor floor_;
  int leader_ = -1;
  std::vector<StudentizedRegionCache> caches_;
  std::vector<int> cache_chall_counts_;  // challenger size each cache was built at
  long long window_evals_ = 0;
};

// Tournament allocation: one besa_round_winner() per round, exactly one arm
// sampled.
class BesaPolicy : public Policy {
 public:
  std::string name() const override;
  void reset(int num_arms, long long horizon) override;
  PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) override;
};

}  // namespace banditlab
