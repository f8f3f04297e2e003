#ifndef LOWZERO_EXPLICIT_FORMULA_HPP
#define LOWZERO_EXPLICIT_FORMULA_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "lowzero/characters.hpp"
#include "lowzero/primes.hpp"
#include "lowzero/testfuncs.hpp"
#include "lowzero/zerofinder.hpp"

namespace lowzero {

// Right-hand side of the explicit formula
//   sum_rho Phi(F_T)(rho) = log(q/pi) - I(F_T) - 2 sum_n Re(chi(n)) F_T(log n) Lambda(n)/sqrt(n)
// for a primitive non-principal character.
struct WeilEvaluation {
  std::uint64_t q = 0;
  std::size_t char_index = 0;
  double T = 0.0;
  double log_term = 0.0;    // log(q/pi)
  double arch_term = 0.0;   // I(F_T) at the character's parity
  double prime_term = 0.0;  // 2 * twisted prime-power sum
  double rhs = 0.0;         // log_term - arch_term - prime_term
};

WeilEvaluation weil_rhs(const CharacterTable& table, std::size_t index,
                        const TestFunction& f, double T,
                        const PrimeTable& primes);

// sum over the listed zeros, both signs, of T F^(T gamma): every positive
// ordinate is doubled (the zero set is conjugate-symmetric for real chi)
// and the central multiplicity enters once with F^(0).
double zero_side(const ZeroList& zeros, const TestFunction& f, double T);

// Asymmetric two-sided sum for a conjugate pair: positive ordinates of chi
// plus positive ordinates of conj(chi) (the latter are chi's negative
// ordinates mirrored), plus the central term.
double two_sided_zero_sum(const ZeroList& chi_list, const ZeroList& conj_list,
                          const TestFunction& f, double T);

// Upper bound on |sum over |gamma| > height of T F^(T gamma)| from the
// zero-count main term and the explicit counting band.  Requires a family
// whose transform obeys a decreasing quadratic-decay envelope past
// T*height (Triangle, Kernel, FAlpha, GAlpha, LTheta, JBeta; the
// GBetaMinorant transform vanishes beyond 2 pi, giving a zero bound).
double zero_tail_bound(double q, const TestFunction& f, double T,
                       double height);

// General L-function data for the Mestre-form explicit formula.
struct MestreData {
  double conductor = 1.0;                  // N
  int degree = 1;                          // m
  std::vector<std::complex<double>> mu;    // size m, Re > -1
  int r_pole = 0;                          // pole order at s = 0 and 1
  double theta = 0.0;                      // Satake bound
  // Re(alpha_{j,pi}(p)^k); j is 1-based.
  std::function<double(std::uint64_t p, int j, int k)> coeff;

  double analytic_conductor() const;
};

double mestre_rhs(const MestreData& data, const TestFunction& f, double T,
                  const PrimeTable& primes);

// Dirichlet specialization of MestreData (N = q, m = 1, mu = delta_chi).
MestreData mestre_dirichlet(const CharacterTable& table, std::size_t index);

// Leading term (1/2 + theta) pi / loglog C(pi)^{3/m}.
double mestre_gamma1_leading(const MestreData& data);

}  // namespace lowzero

#endif
