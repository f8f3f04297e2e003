#include "lowzero/specfun.hpp"

#include <cmath>

#include "lowzero/errors.hpp"

namespace lowzero {

double sinc(double x) {
  if (std::fabs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
  }
  return std::sin(x) / x;
}

double sinpi(double x) {
  const double r = x - std::round(x);
  const double s = std::sin(kPi * r);
  const long long m = std::llround(x - r);
  return (m % 2 == 0) ? s : -s;
}

double digamma(double z) {
  if (!(z > 0.0)) throw domain_error("digamma requires z > 0");
  double acc = 0.0;
  while (z < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  // Asymptotic series: log z - 1/(2z) - sum B_2k / (2k z^2k).
  const double w = 1.0 / (z * z);
  double series = w * (1.0 / 12.0 +
                  w * (-1.0 / 120.0 +
                  w * (1.0 / 252.0 +
                  w * (-1.0 / 240.0 +
                  w * (1.0 / 132.0 +
                  w * (-691.0 / 32760.0 +
                  w * (1.0 / 12.0)))))));
  return acc + std::log(z) - 0.5 / z - series;
}

double trigamma(double z) {
  if (!(z > 0.0)) throw domain_error("trigamma requires z > 0");
  double acc = 0.0;
  while (z < 10.0) {
    acc += 1.0 / (z * z);
    z += 1.0;
  }
  // psi'(z) ~ 1/z + 1/(2z^2) + sum B_2k / z^(2k+1).
  const double w = 1.0 / (z * z);
  const double series = (1.0 / 6.0 +
                        w * (-1.0 / 30.0 +
                        w * (1.0 / 42.0 +
                        w * (-1.0 / 30.0 +
                        w * (5.0 / 66.0 +
                        w * (-691.0 / 2730.0 +
                        w * (7.0 / 6.0))))))) * w / z;
  return acc + 1.0 / z + 0.5 * w + series;
}

double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw domain_error("exp_integral_e1 requires x > 0");
  if (x > 700.0) return 0.0;  // below double underflow once multiplied out
  if (x <= 1.0) {
    // E1(x) = -gamma - log x + sum (-1)^(k+1) x^k / (k k!)
    double sum = 0.0, term = 1.0;
    for (int k = 1; k <= 30; ++k) {
      term *= -x / k;
      sum -= term / k;
      if (std::fabs(term) < 1e-18) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  // Continued fraction (modified Lentz).
  double b = x + 1.0, c = 1e308, d = 1.0 / b, h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() <= 0.0) throw domain_error("log_gamma requires Re(z) > 0");
  std::complex<double> shift(0.0, 0.0);
  while (z.real() < 12.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  // Stirling with Bernoulli corrections.
  static const double B[] = {1.0 / 12.0,   -1.0 / 360.0,   1.0 / 1260.0,
                             -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360360.0,
                             1.0 / 156.0,  -3617.0 / 122400.0};
  const std::complex<double> lz = std::log(z);
  std::complex<double> res = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * kPi);
  std::complex<double> zp = z;
  const std::complex<double> z2 = z * z;
  for (double b : B) {
    res += b / zp;
    zp *= z2;
  }
  return res + shift;
}

double beurling_minus(double x) {
  if (std::fabs(x) < 1e-7) return -1.0 + 2.0 * x;
  if (x > 0.0) {
    const double s = sinpi(x) / kPi;
    return 1.0 - 2.0 * s * s * (trigamma(x) - 1.0 / x);
  }
  return -beurling_plus(-x);
}

double beurling_plus(double x) {
  if (std::fabs(x) < 1e-7) return 1.0 + 2.0 * x;
  if (x > 0.0) {
    const double s = sinpi(x) / (kPi * x);
    return beurling_minus(x) + 2.0 * s * s;
  }
  return -beurling_minus(-x);
}

double selberg_minorant(double beta, double x) {
  if (!(beta > 0.5)) throw domain_error("selberg_minorant requires beta > 1/2");
  return 0.5 * (beurling_minus(x + beta) + beurling_minus(beta - x));
}

}  // namespace lowzero
