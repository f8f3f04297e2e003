#ifndef LOWZERO_QUADRATURE_HPP
#define LOWZERO_QUADRATURE_HPP

#include <functional>

namespace lowzero {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

// Adaptive Simpson on [a, b] to absolute tolerance tol.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol, int max_depth = 48);

// Convenience wrapper that throws precision_error when not converged.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol);

// 16-point Gauss-Legendre on a single panel.
double gauss_legendre_16(const std::function<double(double)>& f, double a,
                         double b);

// Composite Gauss-Legendre with fixed panel width; deterministic panel tree.
double integrate_composite(const std::function<double(double)>& f, double a,
                           double b, double panel_width);

}  // namespace lowzero

#endif
