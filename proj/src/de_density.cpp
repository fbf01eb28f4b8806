#include "banditlab/de_density.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cmath>
#include <cstdlib>

#include "banditlab/numeric.hpp"

namespace banditlab {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int factorial(int n) {
  cpp_int out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// Unnormalized coefficient c_tj = (2t-2-j)! 2^j / (j! (t-1-j)!), with the
// convention c_tt = 0.  Exact.
cpp_rational unnormalized_coefficient(int t, int j) {
  assert(t >= 1 && j >= 0);
  if (j >= t) return cpp_rational(0);
  cpp_int num = factorial(2 * t - 2 - j) << j;
  cpp_int den = factorial(j) * factorial(t - 1 - j);
  return cpp_rational(num, den);
}

}  // namespace

std::vector<double> de_sum_polynomial_coefficients(int t) {
  assert(t >= 1);
  // Normalization (t-1)! 2^{2t-1} shared by every coefficient.
  const cpp_int norm = factorial(t - 1) << (2 * t - 1);
  std::vector<double> out(static_cast<std::size_t>(t));
  for (int j = 0; j < t; ++j) {
    cpp_rational a = unnormalized_coefficient(t, j) / cpp_rational(norm);
    out[static_cast<std::size_t>(j)] = a.convert_to<double>();
  }
  return out;
}

double de_sum_density(int t, double x) {
  assert(t >= 1);
  const std::vector<double> a = de_sum_polynomial_coefficients(t);
  const double ax = std::fabs(x);
  double poly = 0.0;
  for (std::size_t j = a.size(); j-- > 0;) poly = poly * ax + a[j];
  return std::exp(-ax) * poly;
}

double de_sum_upper_tail(int t, double z) {
  assert(t >= 1);
  if (z < 0.0) return 1.0 - de_sum_upper_tail(t, -z);
  // Beyond the cut the integrand is below exp(-(z + 60 + 12t)) * poly, far
  // under the quadrature tolerance.
  const double cut = z + 60.0 + 12.0 * static_cast<double>(t);
  const std::vector<double> a = de_sum_polynomial_coefficients(t);
  auto integrand = [&a](double x) {
    double poly = 0.0;
    for (std::size_t j = a.size(); j-- > 0;) poly = poly * x + a[j];
    return std::exp(-x) * poly;
  };
  return adaptive_simpson(integrand, z, cut, 1e-12);
}

CtjCounterexample ctj_inequality_counterexample(int t_max) {
  assert(t_max >= 1);
  for (int t = 1; t <= t_max; ++t) {
    for (int j = 0; j <= t - 1; ++j) {
      const cpp_rational lhs = cpp_rational(j + 1) * unnormalized_coefficient(t, j + 1) +
                               cpp_rational(j, 2 * t) * unnormalized_coefficient(t, j);
      if (lhs > unnormalized_coefficient(t, j)) {
        return CtjCounterexample{true, t, j};
      }
    }
  }
  return CtjCounterexample{};
}

}  // namespace banditlab
