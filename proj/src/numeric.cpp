#include "banditlab/numeric.hpp"

#include <cassert>
#include <cmath>

namespace banditlab {
namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_recurse(const std::function<double(double)>& f, double a, double b, double fa,
                       double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  assert(a <= b);
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  return simpson_recurse(f, a, b, fa, fm, fb, whole, tol, 50);
}

double monotone_sup(const std::function<double(double)>& f, double lo, double hi, double bound,
                    double tol) {
  assert(lo <= hi);
  if (f(hi) <= bound) return hi;
  double good = lo;
  double bad = hi;
  while (bad - good > tol) {
    const double mid = 0.5 * (good + bad);
    if (f(mid) <= bound) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

}  // namespace banditlab
