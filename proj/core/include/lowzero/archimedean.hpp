#ifndef LOWZERO_ARCHIMEDEAN_HPP
#define LOWZERO_ARCHIMEDEAN_HPP

#include <utility>

#include "lowzero/testfuncs.hpp"

namespace lowzero {

// I(F_T) = int_0^inf ( F_T(x/2) e^{-(1/4 + shift/2) x} / (1 - e^{-x})
//                      - e^{-x} / x ) dx,
// the archimedean term of the explicit formula.  shift is the character
// parity delta (0 or 1) for Dirichlet L-functions and Re(mu_j) for the
// general case; any shift > -1 is accepted.
double i_arch(const TestFunction& f, double T, double shift, double tol = 1e-10);

// (global max, integral over (0, inf)) of x e^{-x/4} / (1 - e^{-x}).
// The integral equals trigamma(1/4) = pi^2 + 8 * Catalan.
std::pair<double, double> kernel_max_and_integral();

}  // namespace lowzero

#endif
