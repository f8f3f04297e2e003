#ifndef LOWZERO_BOUNDS_HPP
#define LOWZERO_BOUNDS_HPP

#include <map>
#include <string>
#include <utility>

#include "lowzero/optimize.hpp"
#include "lowzero/primes.hpp"
#include "lowzero/table_io.hpp"

namespace lowzero {

// A theorem bound evaluated at a concrete input.  `terms` is the named
// breakdown (main, second-order, error budget); budgets are reported but
// never folded into `value`.
struct BoundReport {
  std::string theorem_id;
  std::map<std::string, double> input;
  double value = 0.0;
  std::map<std::string, double> terms;
  bool valid = true;
};

// ---- zero-counting main term and explicit band ------------------------

// (t/pi) log(qt / 2 pi e) - chi(-1)/4.
double zero_count_main(double q, double t, double chi_minus1);
// 0.22737 l + 2 log(1+l) - 0.5 with l = log(q(t+2)/2pi).
double zero_count_band(double q, double t);
bool zero_count_band_valid(double q, double t);

// ---- individual-chi bounds --------------------------------------------

// The _logq forms take log q, so conductors like e^{e^{10}} (beyond
// double range) stay representable.
BoundReport thm1_gamma_bound(double q);
BoundReport thm1_gamma_bound_logq(double logq);
// Zero-count coefficient (pi^2/4)(1 - 4a e^{-C+1/a})/(2a); a <= 0 picks
// the optimal a = 1/(C - log 4).
double thm1_zero_count_coeff(double C, double a = 0.0);
BoundReport thm1_zero_count(double q, double C);
BoundReport thm1_zero_count_logq(double logq, double C);
BoundReport thm2_n_bound(double q);
BoundReport thm2_n_bound_logq(double logq);
BoundReport thm3_tilde_bound(double q);
BoundReport thm3_tilde_bound_logq(double logq);

// ---- family bounds (Theorems 4-6) -------------------------------------

BoundReport thm4_average_vanishing(double q);
BoundReport thm5_min_gamma(double q);
BoundReport thm6_max_gamma(double q);

// ---- proportion curves -------------------------------------------------

struct FAlphaOptimum {
  double alpha0;  // argmin of f(alpha) = (6a^2+pi^2-3)(a+1)/(12 pi^2 (a-1))
  double f0;      // f(alpha0)
  double beta0;   // sqrt((alpha0+1)/(alpha0-1))/2
};
const FAlphaOptimum& falpha_optimum();
double falpha_f(double alpha);

double hr_proportion(double beta);
double thm7_proportion(double beta);
double remark_general_q_proportion(double beta);
double ltheta_proportion(double beta);

// ---- quadratic family ---------------------------------------------------

double quadratic_feasibility_boundary();  // pi / (2 sqrt(pi^2 - 4))
double quadratic_proportion(double beta);

struct Section5Max {
  double beta;
  double t_coef;
};
Section5Max section5_beta_max();

// Smallest admissible interval exponent lambda(beta) for [D - D^lambda, D],
// optimized over the L^theta family.
double section5_lambda(double beta);

// The F^alpha-based piecewise bound on limsup min_{d in [D-D^a, D]}.
double interval_min_bound(double a);

// ---- effective estimates ------------------------------------------------

struct EffectiveQ0 {
  double C;         // max over T of I(F^alpha_T) + 2 sum
  double q0;        // pi e^C
  double argmax_T;
  bool interior;    // argmax away from the T-grid edges
};
EffectiveQ0 effective_q0(double t0, double alpha, const PrimeTable& table,
                         double grid_step = 1e-3);

BoundReport thm14_bound(double q);

struct Thm14Verification {
  double kernel_max;       // ~1.5049 (<= 1.505)
  double kernel_integral;  // ~17.197
  double digamma_const;    // gamma + 3 log 2 + pi/2 (<= 4.228)
  double psi_slope_2x;     // 2 * 1.039
  double psi_slope_4x;     // 4 * 1.039
  bool chain_ok;           // T/2 >= loglog q - 1.43 across the grid
  bool ok;
};
Thm14Verification thm14_verify();

// min of c/((1+D)a) and log(Dc/((1+D)b)) + 3 loglog(Dc/((1+D)b)); the
// second branch is dropped when its argument is <= 1.
double helper_T_lower(double a, double b, double c, double Delta);

// ---- figure data ---------------------------------------------------------

enum class Figure { Fig1, Fig2 };
Table figure_data(Figure which, double beta_lo, double beta_hi, double step);

}  // namespace lowzero

#endif
