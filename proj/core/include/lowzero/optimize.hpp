#ifndef LOWZERO_OPTIMIZE_HPP
#define LOWZERO_OPTIMIZE_HPP

#include <functional>
#include <utility>

namespace lowzero {

struct OptimizationResult {
  double argmin = 0.0;
  double optimum = 0.0;
  int iterations = 0;
  std::pair<double, double> bracket{0.0, 0.0};
  // Post-hoc unimodality probe: false when a sampled neighbor beats the
  // reported minimum by more than the tolerance allows.
  bool unimodal = true;
};

// Golden-section minimization of a (presumed) unimodal objective on [lo, hi].
OptimizationResult minimize_1d(const std::function<double(double)>& objective,
                               double lo, double hi, double tol = 1e-10);

// Maximization convenience built on minimize_1d.
OptimizationResult maximize_1d(const std::function<double(double)>& objective,
                               double lo, double hi, double tol = 1e-10);

// Brent-style root bracket refinement; f(a) and f(b) must have opposite signs.
double find_root(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

}  // namespace lowzero

#endif
