#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "banditlab/environments.hpp"
#include "banditlab/policy.hpp"
#include "banditlab/rng.hpp"

namespace banditlab {

// How one scalar arm parameter is produced at the start of a replication:
// either a fixed number, a standard normal draw, or the deviation implied by
// an Exp(1) draw of the precision (sigma = E^{-1/2}).
struct ParamSpec {
  enum class Draw { kFixed, kStdNormal, kInvSqrtExp };
  Draw draw = Draw::kFixed;
  double value = 0.0;

  static ParamSpec fixed(double v) { return {Draw::kFixed, v}; }
  static ParamSpec std_normal() { return {Draw::kStdNormal, 0.0}; }
  static ParamSpec inv_sqrt_exp() { return {Draw::kInvSqrtExp, 0.0}; }

  bool is_fixed() const { return draw == Draw::kFixed; }
  double realize(RandomStream& rng) const;
};

// One arm of a scenario: an i.i.d. family whose parameters may be drawn per
// replication, or a finite-state reward chain (always fixed).
struct ArmSpec {
  enum class Kind { kIid, kMarkov };
  Kind kind = Kind::kIid;
  RewardModel::Kind family = RewardModel::Kind::kBernoulli;
  ParamSpec primary;    // p / mean / location / rate / lo / value
  ParamSpec secondary;  // stddev / scale / hi
  MarkovRewardModel markov;

  static ArmSpec iid(RewardModel::Kind family, ParamSpec primary, ParamSpec secondary = {});
  static ArmSpec iid_fixed(const RewardModel& model);
  static ArmSpec markov_arm(MarkovRewardModel model);

  bool is_fixed() const;
  // Fixed arms consume nothing from the stream, so mixed rosters stay
  // replayable; sampled parameters are drawn primary first.
  RewardModel realize(RandomStream& rng) const;
  // Exact mean of the realized arm when it is fixed.
  double fixed_mean() const;
};

// A policy entry in a scenario roster: the algorithm, an optional scalar
// parameter (epsilon-greedy's c, Boltzmann's tau), and the number of
// observations each arm is seeded with before the round loop (1 for every
// standard procedure; 10 turns besa into the besat variant).
struct PolicySpec {
  std::string type;
  double parameter = 0.0;
  int warm_start = 1;

  std::string label() const;
};

// Known type strings: ssmc, ssmc-star, sstc, besa, ucb1, ucb-agrawal,
// ucb-lai, ucb1-tuned, ucb1-normal, kl-ucb, kl-ucb-plus, epsilon-greedy,
// boltzmann, thompson. Throws std::invalid_argument for anything else.
std::unique_ptr<Policy> make_policy(const PolicySpec& spec);

struct Scenario {
  std::string name;
  std::string description;
  std::vector<ArmSpec> arms;
  long long horizon = 1000;
  int replications = 1000;
  std::uint64_t master_seed = 97531;
  std::vector<PolicySpec> roster;
  // Regret histogram bin starts; bin i spans [edges[i], edges[i+1]) and the
  // last bin is open-ended.
  std::vector<double> bin_edges = {0.0, 200.0, 400.0, 600.0, 800.0, 1000.0, 1200.0};
};

// Throws std::invalid_argument describing the first problem found: sizes and
// ranges, roster/type validity, and the Bernoulli-only policies (kl-ucb,
// kl-ucb-plus, thompson) demanding fixed Bernoulli arms throughout.
void validate_scenario(const Scenario& scenario);

// Declarative scenario text: [scenario] / [arm] / [policy] sections of
// key = value lines, '#' comment lines, repeated [arm] and [policy] sections
// in roster order. Unknown sections or keys are rejected; every error message
// carries origin and line number. The parsed scenario is validated.
Scenario parse_scenario_text(const std::string& text, const std::string& origin);
Scenario load_scenario_file(const std::string& path);

}  // namespace banditlab
