#include "banditlab/presets.hpp"

namespace banditlab {

namespace {

PolicySpec pol(const char* type, double parameter = 0.0, int warm_start = 1) {
  PolicySpec spec;
  spec.type = type;
  spec.parameter = parameter;
  spec.warm_start = warm_start;
  return spec;
}

std::vector<PolicySpec> bernoulli_roster() {
  return {pol("ssmc"), pol("ssmc-star"), pol("besa"),
          pol("kl-ucb"), pol("kl-ucb-plus"), pol("thompson")};
}

std::vector<PolicySpec> dblexp_roster() {
  std::vector<PolicySpec> roster = {pol("ssmc"), pol("besa"), pol("ucb1-tuned")};
  for (double tau : {0.1, 0.2, 0.5, 1.0}) roster.push_back(pol("boltzmann", tau));
  for (double c : {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    roster.push_back(pol("epsilon-greedy", c));
  }
  return roster;
}

Scenario bernoulli_scenario(const char* name, const char* description,
                            const std::vector<double>& ps) {
  Scenario sc;
  sc.name = name;
  sc.description = description;
  for (double p : ps) sc.arms.push_back(ArmSpec::iid_fixed(RewardModel::bernoulli(p)));
  sc.horizon = 20000;
  sc.roster = bernoulli_roster();
  return sc;
}

Scenario dblexp_scenario(const char* name, const char* description, double scale) {
  Scenario sc;
  sc.name = name;
  sc.description = description;
  for (int k = 0; k < 10; ++k) {
    sc.arms.push_back(ArmSpec::iid(RewardModel::Kind::kDoubleExponential, ParamSpec::std_normal(),
                                   ParamSpec::fixed(scale)));
  }
  sc.horizon = 1000;
  sc.roster = dblexp_roster();
  return sc;
}

std::vector<Scenario> build_presets() {
  std::vector<Scenario> presets;

  presets.push_back(bernoulli_scenario(
      "bernoulli-pair", "Two Bernoulli arms, means 0.9 and 0.8, N=20000.", {0.9, 0.8}));
  presets.push_back(bernoulli_scenario(
      "bernoulli-close", "Two Bernoulli arms with a 0.01 gap, means 0.81 and 0.8, N=20000.",
      {0.81, 0.8}));
  presets.push_back(bernoulli_scenario(
      "bernoulli-ten",
      "Ten low-mean Bernoulli arms, means 0.1, 0.05 x3, 0.02 x3, 0.01 x3, N=20000.",
      {0.1, 0.05, 0.05, 0.05, 0.02, 0.02, 0.02, 0.01, 0.01, 0.01}));
  presets.push_back(bernoulli_scenario(
      "bernoulli-margin",
      "Ten Bernoulli arms, one at 0.51 against nine at 0.5, N=20000.",
      {0.51, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5}));

  {
    Scenario sc;
    sc.name = "gauss-ten-unit";
    sc.description =
        "Ten unit-variance normal arms whose means are drawn N(0,1) fresh each replication, "
        "N=1000.";
    for (int k = 0; k < 10; ++k) {
      sc.arms.push_back(ArmSpec::iid(RewardModel::Kind::kNormal, ParamSpec::std_normal(),
                                     ParamSpec::fixed(1.0)));
    }
    sc.horizon = 1000;
    sc.roster = {pol("ssmc"), pol("ucb1"), pol("ucb-agrawal")};
    presets.push_back(std::move(sc));
  }

  {
    Scenario sc;
    sc.name = "gauss-ten-hetero";
    sc.description =
        "Ten normal arms with means N(0,1) and precisions Exp(1), drawn fresh each replication, "
        "N=1000.";
    for (int k = 0; k < 10; ++k) {
      sc.arms.push_back(ArmSpec::iid(RewardModel::Kind::kNormal, ParamSpec::std_normal(),
                                     ParamSpec::inv_sqrt_exp()));
    }
    sc.horizon = 1000;
    sc.roster = {pol("sstc"), pol("ucb1-tuned"), pol("ucb1-normal")};
    presets.push_back(std::move(sc));
  }

  {
    Scenario sc;
    sc.name = "gauss-four-fixed";
    sc.description =
        "Four fixed normal arms (mean, sd): (1.8,0.5), (2,0.7), (1.5,0.5), (2.2,0.3), N=1000.";
    sc.arms = {ArmSpec::iid_fixed(RewardModel::normal(1.8, 0.5)),
               ArmSpec::iid_fixed(RewardModel::normal(2.0, 0.7)),
               ArmSpec::iid_fixed(RewardModel::normal(1.5, 0.5)),
               ArmSpec::iid_fixed(RewardModel::normal(2.2, 0.3))};
    sc.horizon = 1000;
    sc.roster = {pol("sstc"), pol("ucb1-tuned")};
    presets.push_back(std::move(sc));
  }

  presets.push_back(dblexp_scenario(
      "dblexp-scale1",
      "Ten double-exponential arms, scale 1, locations N(0,1) fresh each replication, N=1000.",
      1.0));
  presets.push_back(dblexp_scenario(
      "dblexp-scale2",
      "Ten double-exponential arms, scale 2, locations N(0,1) fresh each replication, N=1000.",
      2.0));
  presets.push_back(dblexp_scenario(
      "dblexp-scale5",
      "Ten double-exponential arms, scale 5, locations N(0,1) fresh each replication, N=1000.",
      5.0));

  {
    Scenario sc;
    sc.name = "texpo-five";
    sc.description =
        "Five truncated-exponential arms min(X/10, 1), X ~ Exp(1/k) for k = 1..5, N=20000.";
    for (int k = 1; k <= 5; ++k) {
      sc.arms.push_back(ArmSpec::iid_fixed(RewardModel::truncated_exponential(1.0 / k)));
    }
    sc.horizon = 20000;
    sc.roster = {pol("ssmc"), pol("ssmc-star"), pol("besa"), pol("besa", 0.0, 10)};
    presets.push_back(std::move(sc));
  }

  {
    Scenario sc;
    sc.name = "tpoisson-six";
    sc.description =
        "Six truncated-Poisson arms min(X/10, 1), X ~ Poisson(0.5 + k/3) for k = 1..6, N=20000.";
    for (int k = 1; k <= 6; ++k) {
      sc.arms.push_back(ArmSpec::iid_fixed(RewardModel::truncated_poisson(0.5 + k / 3.0)));
    }
    sc.horizon = 20000;
    sc.roster = {pol("ssmc"), pol("ssmc-star"), pol("besa"), pol("besa", 0.0, 10)};
    presets.push_back(std::move(sc));
  }

  {
    Scenario sc;
    sc.name = "uniform-pair";
    sc.description = "Uniform(0.2, 0.4) against Uniform(0, 1), N=20000.";
    sc.arms = {ArmSpec::iid_fixed(RewardModel::uniform(0.2, 0.4)),
               ArmSpec::iid_fixed(RewardModel::uniform(0.0, 1.0))};
    sc.horizon = 20000;
    sc.roster = {pol("sstc"), pol("ssmc")};
    presets.push_back(std::move(sc));
  }

  {
    Scenario sc;
    sc.name = "markov-pair";
    sc.description =
        "Two 2-state reward chains with 0/1 state values, stationary means 0.5 and 0.375, "
        "N=20000.";
    MarkovRewardModel better;
    better.transition = {{0.6, 0.4}, {0.4, 0.6}};
    better.emissions = {RewardModel::constant(0.0), RewardModel::constant(1.0)};
    MarkovRewardModel worse;
    worse.transition = {{0.7, 0.3}, {0.5, 0.5}};
    worse.emissions = {RewardModel::constant(0.0), RewardModel::constant(1.0)};
    sc.arms = {ArmSpec::markov_arm(std::move(better)), ArmSpec::markov_arm(std::move(worse))};
    sc.horizon = 20000;
    sc.roster = {pol("ssmc"), pol("sstc")};
    presets.push_back(std::move(sc));
  }

  return presets;
}

}  // namespace

const std::vector<Scenario>& preset_scenarios() {
  static const std::vector<Scenario> presets = build_presets();
  return presets;
}

const Scenario* find_preset(const std::string& name) {
  for (const Scenario& sc : preset_scenarios()) {
    if (sc.name == name) return &sc;
  }
  return nullptr;
}

}  // namespace banditlab
