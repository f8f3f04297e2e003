#ifndef LOWZERO_SPECFUN_HPP
#define LOWZERO_SPECFUN_HPP

#include <complex>

namespace lowzero {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kCatalan = 0.91596559417721901505460351493238411;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

// sin(x)/x with the removable singularity filled in.
double sinc(double x);

// sin(pi x) with exact argument reduction modulo 1.
double sinpi(double x);

// psi(z) for z > 0, absolute accuracy ~1e-13.
double digamma(double z);

// psi'(z) for z > 0.
double trigamma(double z);

// Exponential integral E1(x) = int_x^inf e^-t / t dt, x > 0.
double exp_integral_e1(double x);

// Principal branch of log Gamma(z) for Re(z) > 0.
std::complex<double> log_gamma(std::complex<double> z);

// Beurling's extremal minorant/majorant of sgn(x) of exponential type 2*pi.
// B-(x) <= sgn(x) <= B+(x), int (B+ - sgn) = int (sgn - B-) = 1.
double beurling_minus(double x);
double beurling_plus(double x);

// The Beurling-Selberg minorant of the indicator of [-beta, beta],
// (B-(x+beta) + B-(beta-x)) / 2, defined for beta > 1/2.
double selberg_minorant(double beta, double x);

}  // namespace lowzero

#endif
