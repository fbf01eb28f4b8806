#pragma once

#include <functional>

namespace banditlab {

// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

// Largest x in [lo, hi] with f(x) <= bound, for nondecreasing f with
// f(lo) <= bound. Bisection to absolute tolerance tol.
double monotone_sup(const std::function<double(double)>& f, double lo, double hi, double bound,
                    double tol);

}  // namespace banditlab
