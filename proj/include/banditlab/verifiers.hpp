#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "banditlab/rng.hpp"

namespace banditlab {

// Self-contained numeric checks of the theory the allocation procedures lean
// on.  Each check returns a pass/fail verdict plus a human-readable summary of
// what was measured; none of them mutates global state, and the stochastic
// ones consume only the stream handed in.

struct VerifierReport {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Exact rational check of the double-exponential coefficient inequality for
// all 1 <= t <= t_max (see de_density.hpp).
VerifierReport verify_ctj_inequality(int t_max);

// Tail-ratio bound for the t-fold double-exponential sum: at every z in the
// grid, P(S_t > z + delta t) <= exp(-t b1) P(S_t > z) with
// b1 = delta - 2 log(1 + delta/2), allowing 1e-6 quadrature slack.
VerifierReport verify_b2_bound(int t, double delta, const std::vector<double>& z_grid);

// Full sweep of the tail-ratio bound over t <= 10, delta in {0.5, 1},
// z in {0, 1, 5}, aggregated into one verdict.
VerifierReport verify_b2_sweep();

// Sliding-window minimum asymptotics for standard normal data: with n2
// observations per window inside a sequence of n - n2 draws, the normalized
// depth (0 - min window mean) / sqrt(2 log(n) / n2) should concentrate near 1
// from below.  Passes when the median ratio over the replications lies in
// [0.8, 1.05], the sandwich implied by the windowed extreme-value bounds at
// n = 1e6.
VerifierReport verify_min1_asymptotic(long long n, int n2, int replications, RandomStream& rng);

// Median ratio of the check above at each n (with n2 = ceil(2 log n)) must
// increase strictly toward 1 across the given sample sizes.
VerifierReport verify_min1_trend(const std::vector<long long>& ns, int replications,
                                 std::uint64_t seed);

// Chernoff bound for normal sample variances on t observations:
// P(sigma_hat^2 >= x) (x > 1) and P(sigma_hat^2 <= x) (x < 1) are both at most
// exp[(t-1)/2 (log x - x + 1)].  Empirical frequencies over the replications
// must stay within three binomial standard errors of the bound.
VerifierReport verify_chisq_chernoff(int t, const std::vector<double>& x_grid, int replications,
                                     RandomStream& rng);

// The standard battery: coefficient inequality to t = 50, tail-ratio sweep,
// window-minimum band at n = 1e6 plus its trend over n in {1e4, 1e5, 1e6},
// and the variance Chernoff grid.
std::vector<VerifierReport> verify_all(std::uint64_t seed);

}  // namespace banditlab
