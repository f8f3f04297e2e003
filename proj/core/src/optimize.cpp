#include "lowzero/optimize.hpp"

#include <cmath>

#include "lowzero/errors.hpp"

namespace lowzero {

OptimizationResult minimize_1d(const std::function<double(double)>& objective,
                               double lo, double hi, double tol) {
  if (!(hi > lo)) throw domain_error("minimize_1d requires lo < hi");
  constexpr double kInvPhi = 0.61803398874989484820;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = objective(x1), f2 = objective(x2);
  int iters = 0;
  while (b - a > tol && iters < 400) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = objective(x2);
    }
    ++iters;
  }
  OptimizationResult res;
  res.argmin = (f1 <= f2) ? x1 : x2;
  res.optimum = objective(res.argmin);
  res.iterations = iters;
  res.bracket = {a, b};

  // Neighbor sampling: the reported argmin should beat points a few
  // tolerances away on each side (when inside the original interval).
  const double step = std::max(8.0 * tol, 1e-9 * (hi - lo));
  for (double s : {-4.0, -1.5, 1.5, 4.0}) {
    const double x = res.argmin + s * step;
    if (x <= lo || x >= hi) continue;
    if (objective(x) < res.optimum - 1e-12 * (1.0 + std::fabs(res.optimum)))
      res.unimodal = false;
  }
  return res;
}

OptimizationResult maximize_1d(const std::function<double(double)>& objective,
                               double lo, double hi, double tol) {
  OptimizationResult res =
      minimize_1d([&](double x) { return -objective(x); }, lo, hi, tol);
  res.optimum = -res.optimum;
  return res;
}

double find_root(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0))
    throw domain_error("find_root: no sign change in bracket");
  double c = a, fc = fa, d = b - a, e = d;
  for (int i = 0; i < 200; ++i) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * 2.22e-16 * std::fabs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q_, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q_ = 1.0 - s;
      } else {
        q_ = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q_ * (q_ - r) - (b - a) * (r - 1.0));
        q_ = (q_ - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q_ = -q_;
      p = std::fabs(p);
      if (2.0 * p < std::fmin(3.0 * xm * q_ - std::fabs(tol1 * q_), std::fabs(e * q_))) {
        e = d;
        d = p / q_;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
  }
  return b;
}

}  // namespace lowzero
