#pragma once

#include <vector>

namespace banditlab {

// Density of S_t, the sum of t independent standard double-exponential
// (Laplace, location 0, scale 1) variables.  On x >= 0 the density factors as
//   f_t(x) = exp(-x) * g_t(x)
// with g_t a polynomial of degree t-1 whose coefficients are rationals; the
// density extends to x < 0 by evenness.  Coefficients are computed in exact
// big-rational arithmetic and only converted to double at the end.

// Coefficients a_0..a_{t-1} of g_t, so g_t(x) = sum_j a_j x^j.  Requires t >= 1.
std::vector<double> de_sum_polynomial_coefficients(int t);

// f_t(x) for any real x (even extension).  Requires t >= 1.
double de_sum_density(int t, double x);

// P(S_t > z) by adaptive quadrature over the density.  Accepts any real z;
// negative z is handled through symmetry.  Requires t >= 1.
double de_sum_upper_tail(int t, double z);

// First violation, if any, of the coefficient inequality
//   (j+1) c_{t,j+1} + (j / (2t)) c_{tj} <= c_{tj},   0 <= j <= t-1,
// where c_tj are the unnormalized numerators of g_t and c_tt = 0.  The scan
// covers 1 <= t <= t_max in exact rational arithmetic.
struct CtjCounterexample {
  bool found = false;
  int t = 0;
  int j = 0;
};

CtjCounterexample ctj_inequality_counterexample(int t_max);

}  // namespace banditlab
