#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "banditlab/baselines.hpp"

using namespace banditlab;

namespace {

ArmHistory history_of(const std::vector<double>& rewards) {
  ArmHistory h;
  for (double r : rewards) h.add(r);
  return h;
}

ArmHistory bernoulli_history(int successes, int failures) {
  ArmHistory h;
  for (int i = 0; i < successes; ++i) h.add(1.0);
  for (int i = 0; i < failures; ++i) h.add(0.0);
  return h;
}

// Linear-scan reference for the kl-ucb optimization.
double klucb_scan(double mean, long long n, double threshold, double step) {
  double best = mean;
  for (double q = mean; q < 1.0; q += step) {
    const double p = std::min(q, 1.0 - 1e-12);
    if (p > mean && static_cast<double>(n) * bernoulli_kl(mean, p) > threshold) break;
    best = p;
  }
  return best;
}

}  // namespace

TEST_CASE("argmax breaks ties toward the smallest index") {
  CHECK(argmax_index({1.0, 1.0}) == 0);
  CHECK(argmax_index({0.5, 0.7, 0.7}) == 1);
  CHECK(argmax_index({-2.0, -1.0, -3.0}) == 1);
  CHECK(argmax_index({4.0}) == 0);
}

TEST_CASE("index formulas match frozen values") {
  CHECK(ucb1_index(0.5, 10, 100) == doctest::Approx(1.459705182438).epsilon(1e-10));
  CHECK(ucb_agrawal_index(0.5, 10, 100) == doctest::Approx(1.645056545700).epsilon(1e-10));
  CHECK(ucb_lai_index(0.5, 10, 1000) == doctest::Approx(1.459705182438).epsilon(1e-10));
  CHECK(ucb1_tuned_index(0.5, 0.3, 10, 100) == doctest::Approx(0.839307021221).epsilon(1e-10));
  CHECK(ucb1_normal_index(0.5, 0.3, 10, 100) == doctest::Approx(1.314336850930).epsilon(1e-10));
}

TEST_CASE("clamps in the index formulas") {
  // Nested logs never go negative: at n = 2, log log n < 0 is clamped away.
  CHECK(ucb_agrawal_index(0.0, 1, 2) ==
        doctest::Approx(std::sqrt(2.0 * std::log(2.0))).epsilon(1e-12));
  // At the horizon the exploration bonus vanishes.
  CHECK(ucb_lai_index(0.5, 1000, 1000) == 0.5);
  // Large dispersion: the min caps the spread term at 1/4.
  const double capped = 0.5 + std::sqrt(std::log(100.0) / 10.0 * 0.25);
  CHECK(ucb1_tuned_index(0.5, 10.0, 10, 100) == doctest::Approx(capped).epsilon(1e-12));
}

TEST_CASE("bernoulli divergence matches frozen values and is zero on the diagonal") {
  CHECK(bernoulli_kl(0.9, 0.8) == doctest::Approx(0.036690014035).epsilon(1e-10));
  CHECK(bernoulli_kl(0.8, 0.9) == doctest::Approx(0.044403007587).epsilon(1e-10));
  CHECK(bernoulli_kl(0.5, 0.25) == doctest::Approx(0.143841036226).epsilon(1e-10));
  CHECK(bernoulli_kl(0.3, 0.6) == doctest::Approx(0.183786897387).epsilon(1e-10));
  CHECK(bernoulli_kl(0.4, 0.4) == 0.0);
  CHECK(bernoulli_kl(0.0, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(bernoulli_kl(1.0, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("kl-ucb optimization against a linear scan and frozen values") {
  CHECK(klucb_index(0.5, 10, std::log(100.0)) ==
        doctest::Approx(0.887908761646).epsilon(1e-9));
  CHECK(klucb_index(0.9, 5, std::log(20.0)) == doctest::Approx(0.999903060335).epsilon(1e-9));
  CHECK(klucb_threshold(100) == doctest::Approx(9.186709063412).epsilon(1e-10));
  CHECK(klucb_plus_threshold(100, 10) == doctest::Approx(std::log(10.0)).epsilon(1e-12));

  for (double mean : {0.1, 0.35, 0.62}) {
    for (double threshold : {0.05, 0.7, 2.3}) {
      for (long long n : {1LL, 4LL, 25LL}) {
        const double got = klucb_index(mean, n, threshold);
        const double want = klucb_scan(mean, n, threshold, 1e-5);
        CHECK(std::fabs(got - want) <= 3e-5);
      }
    }
  }

  // Saturated mean and zero threshold edge cases.
  CHECK(klucb_index(1.0, 7, 3.0) == 1.0);
  CHECK(klucb_index(0.3, 5, 0.0) == doctest::Approx(0.3).epsilon(1e-8));
  // Larger thresholds never shrink the index.
  double prev = 0.0;
  for (double threshold : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    const double v = klucb_index(0.4, 12, threshold);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("boltzmann probabilities are a stable softmax") {
  const std::vector<double> probs = boltzmann_probabilities({1.0, 2.0}, 1.0);
  REQUIRE(probs.size() == 2);
  CHECK(probs[0] == doctest::Approx(0.268941421370).epsilon(1e-10));
  CHECK(probs[0] + probs[1] == doctest::Approx(1.0).epsilon(1e-12));

  // Subtracting the top mean first keeps huge inputs finite.
  const std::vector<double> huge = boltzmann_probabilities({1e308, 0.0}, 0.1);
  CHECK(std::isfinite(huge[0]));
  CHECK(huge[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(huge[1] == doctest::Approx(0.0));

  double sum = 0.0;
  for (double p : boltzmann_probabilities({0.3, -0.2, 0.9, 0.1}, 0.25)) {
    CHECK(p >= 0.0);
    sum += p;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("policy names are the published labels") {
  CHECK(Ucb1Policy().name() == "ucb1");
  CHECK(UcbAgrawalPolicy().name() == "ucb-agrawal");
  CHECK(UcbLaiPolicy().name() == "ucb-lai");
  CHECK(Ucb1TunedPolicy().name() == "ucb1-tuned");
  CHECK(Ucb1NormalPolicy().name() == "ucb1-normal");
  CHECK(KlUcbPolicy(false).name() == "kl-ucb");
  CHECK(KlUcbPolicy(true).name() == "kl-ucb-plus");
  CHECK(ThompsonPolicy().name() == "thompson");
  CHECK(EpsilonGreedyPolicy(0.5).name() == "epsilon-greedy(c=0.5)");
  CHECK(BoltzmannPolicy(0.1).name() == "boltzmann(tau=0.1)");
  CHECK(BoltzmannPolicy(1.0).name() == "boltzmann(tau=1)");
}

TEST_CASE("ucb family picks the arm with the top index") {
  RandomStream rng(1);
  std::vector<ArmHistory> arms = {bernoulli_history(4, 1), bernoulli_history(1, 4)};

  Ucb1Policy ucb1;
  ucb1.reset(2, 1000);
  CHECK(ucb1.decide(arms, rng).arms == std::vector<int>{0});

  // With a large imbalance in counts the bonus flips the choice.
  arms = {bernoulli_history(90, 10), bernoulli_history(1, 1)};
  CHECK(ucb1.decide(arms, rng).arms == std::vector<int>{1});

  UcbAgrawalPolicy agrawal;
  agrawal.reset(2, 1000);
  CHECK(agrawal.decide(arms, rng).arms == std::vector<int>{1});

  // The horizon-aware index has no per-arm count, so only means order it.
  UcbLaiPolicy lai;
  lai.reset(2, 1000);
  CHECK(lai.decide(arms, rng).arms == std::vector<int>{0});
}

TEST_CASE("ucb1-tuned forces a second pull before using deviations") {
  Ucb1TunedPolicy policy;
  policy.reset(3, 1000);
  RandomStream rng(2);
  std::vector<ArmHistory> arms = {history_of({0.2, 0.4}), history_of({0.9}),
                                  history_of({0.1, 0.1})};
  CHECK(policy.decide(arms, rng).arms == std::vector<int>{1});
  arms[1].add(0.8);
  const PolicyDecision d = policy.decide(arms, rng);
  REQUIRE(d.arms.size() == 1);
  CHECK(d.arms[0] == 1);  // top mean and equal counts
}

TEST_CASE("ucb1-normal forced phase takes the smallest count, then smallest index") {
  Ucb1NormalPolicy policy;
  policy.reset(3, 1000);
  RandomStream rng(3);
  std::vector<ArmHistory> arms = {history_of({0.1, 0.1, 0.1}), history_of({0.9, 0.9}),
                                  history_of({0.5, 0.5, 0.5, 0.5, 0.5})};
  // total = 10, 8 log 10 = 18.4: everyone is forced; arm 1 has the fewest.
  CHECK(policy.decide(arms, rng).arms == std::vector<int>{1});
  arms[1].add(0.9);
  // Tie at three observations between arms 0 and 1: smallest index.
  CHECK(policy.decide(arms, rng).arms == std::vector<int>{0});

  // Saturate the forced phase and confirm the index comparison takes over.
  std::vector<ArmHistory> heavy(2);
  for (int i = 0; i < 60; ++i) heavy[0].add(i % 2 == 0 ? 0.0 : 1.0);
  for (int i = 0; i < 60; ++i) heavy[1].add(0.45);
  // total = 120, 8 log 120 = 38.3 < 60: no forced arm remains.
  const PolicyDecision d = policy.decide(heavy, rng);
  REQUIRE(d.arms.size() == 1);
  CHECK(d.arms[0] == 0);  // mean 0.5 plus a dispersion bonus beats constant 0.45
}

TEST_CASE("kl-ucb policies rank saturated and partial arms sensibly") {
  KlUcbPolicy plain(false);
  plain.reset(2, 1000);
  RandomStream rng(4);
  std::vector<ArmHistory> arms = {bernoulli_history(50, 50), bernoulli_history(9, 1)};
  CHECK(plain.decide(arms, rng).arms == std::vector<int>{1});

  KlUcbPolicy plus(true);
  plus.reset(2, 1000);
  CHECK(plus.decide(arms, rng).arms == std::vector<int>{1});

  // All-success arms saturate at index 1 and ties go to the first.
  arms = {bernoulli_history(5, 0), bernoulli_history(3, 0)};
  CHECK(plain.decide(arms, rng).arms == std::vector<int>{0});
}

TEST_CASE("epsilon-greedy explores early and exploits late") {
  EpsilonGreedyPolicy policy(0.5);
  policy.reset(2, 1000);

  // total = 1 keeps epsilon at 1: pure exploration.
  std::vector<ArmHistory> young = {history_of({0.9}), ArmHistory{}};
  int explored[2] = {0, 0};
  for (int i = 0; i < 600; ++i) {
    RandomStream rng = RandomStream::derive(21, static_cast<std::uint64_t>(i), "eps");
    ++explored[policy.decide(young, rng).arms[0]];
  }
  CHECK(explored[0] > 150);
  CHECK(explored[1] > 150);

  // Large total: epsilon = 1.5 / 400, so the greedy arm dominates.
  std::vector<ArmHistory> old_arms = {bernoulli_history(40, 160), bernoulli_history(160, 40)};
  int greedy = 0;
  for (int i = 0; i < 1000; ++i) {
    RandomStream rng = RandomStream::derive(22, static_cast<std::uint64_t>(i), "eps");
    if (policy.decide(old_arms, rng).arms[0] == 1) ++greedy;
  }
  CHECK(greedy > 960);
}

TEST_CASE("boltzmann sampling matches its probabilities") {
  BoltzmannPolicy policy(1.0);
  policy.reset(2, 1000);
  std::vector<ArmHistory> arms = {history_of({1.0, 1.0}), history_of({2.0, 2.0})};
  int first = 0;
  const int trials = 4000;
  for (int i = 0; i < trials; ++i) {
    RandomStream rng = RandomStream::derive(23, static_cast<std::uint64_t>(i), "soft");
    if (policy.decide(arms, rng).arms[0] == 0) ++first;
  }
  // Expected frequency 0.2689 with a 5 sigma band.
  const double p = 0.268941421370;
  const double band = 5.0 * std::sqrt(p * (1.0 - p) / trials);
  CHECK(std::fabs(static_cast<double>(first) / trials - p) < band);
}

TEST_CASE("thompson sampling is deterministic per stream and favors the better arm") {
  ThompsonPolicy policy;
  policy.reset(2, 1000);
  std::vector<ArmHistory> arms = {bernoulli_history(9, 1), bernoulli_history(1, 9)};

  RandomStream a(77), b(77);
  CHECK(policy.decide(arms, a).arms == policy.decide(arms, b).arms);

  int better = 0;
  for (int i = 0; i < 1000; ++i) {
    RandomStream rng = RandomStream::derive(24, static_cast<std::uint64_t>(i), "ts");
    if (policy.decide(arms, rng).arms[0] == 0) ++better;
  }
  CHECK(better > 900);
}
