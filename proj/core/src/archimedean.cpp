#include "lowzero/archimedean.hpp"

#include <cmath>

#include "lowzero/errors.hpp"
#include "lowzero/optimize.hpp"
#include "lowzero/quadrature.hpp"
#include "lowzero/specfun.hpp"

namespace lowzero {

double i_arch(const TestFunction& f, double T, double shift, double tol) {
  validate(f);
  if (!(T > 0.0)) throw domain_error("i_arch requires T > 0");
  if (!(shift > -1.0)) throw domain_error("i_arch requires shift > -1");
  const double a = 0.25 + 0.5 * shift;
  const double c = support_halfwidth(f);
  const double edge = 2.0 * c * T;  // support edge of F_T(x/2)
  if (!std::isfinite(edge) && a <= 1e-3)
    throw domain_error("i_arch: unbounded support requires shift > -1/2");

  // Secant slope of F at the seam keeps the near-zero branch continuous
  // with the direct formula.
  const double x_seam = 1e-6;
  const double secant = (eval(f, x_seam / (2.0 * T)) - 1.0) / x_seam;

  auto integrand = [&](double x) {
    if (x >= 1e-3) {
      const double em = -std::expm1(-x);  // 1 - e^{-x}
      return eval(f, x / (2.0 * T)) * std::exp(-a * x) / em -
             std::exp(-x) / x;
    }
    // Near zero both pieces carry a 1/x pole; cancel it analytically.
    const double F =
        (x < x_seam) ? 1.0 + secant * x : eval(f, x / (2.0 * T));
    const double g_minus = 0.5 + x / 12.0 - x * x * x / 720.0;  // 1/(1-e^-x)-1/x
    const double dF_over_x = (x < x_seam) ? secant : (F - 1.0) / x;
    const double t2 =
        std::exp(-x) * (F * (x == 0.0 ? (1.0 - a)
                                      : std::expm1((1.0 - a) * x) / x) +
                        dF_over_x);
    return F * std::exp(-a * x) * g_minus + t2;
  };

  // Truncate where both pieces are below ~1e-19.
  double cutoff = 48.0;
  if (a < 1.0) cutoff = std::max(cutoff, 50.0 / std::max(a, 1e-3));
  const double upper = std::isfinite(edge) ? std::min(edge, cutoff) : cutoff;

  double total = 0.0, err = 0.0;
  bool ok = true;
  const double seams[3] = {1e-3, std::min(upper, edge), upper};
  double lo = 0.0;
  for (double hi : seams) {
    hi = std::min(hi, upper);
    if (hi > lo) {
      QuadResult q = integrate_adaptive(integrand, lo, hi, 0.5 * tol);
      total += q.value;
      err += q.error_estimate;
      ok = ok && q.converged;
      lo = hi;
    }
  }
  if (!ok) throw precision_error("i_arch quadrature did not converge", err);
  return total - exp_integral_e1(upper);
}

std::pair<double, double> kernel_max_and_integral() {
  auto phi = [](double x) {
    if (x == 0.0) return 1.0;
    return x * std::exp(-0.25 * x) / (-std::expm1(-x));
  };
  OptimizationResult m = maximize_1d(phi, 1e-6, 20.0, 1e-10);
  const double integral = integrate(phi, 0.0, 200.0, 1e-11);
  return {m.optimum, integral};
}

}  // namespace lowzero
