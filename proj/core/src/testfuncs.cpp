#include "lowzero/testfuncs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lowzero/errors.hpp"
#include "lowzero/quadrature.hpp"
#include "lowzero/specfun.hpp"

namespace lowzero {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shared factor of the FAlpha/Kernel transforms:
//   w(t) = 2 pi cos(t/2) / (pi^2 - t^2) = pi sinc((|t|-pi)/2) / (|t|+pi),
// the second form being regular at |t| = pi.
double falpha_w(double t) {
  const double u = std::fabs(t);
  return kPi * sinc(0.5 * (u - kPi)) / (u + kPi);
}

double falpha_eval(double alpha, double x) {
  const double u = std::fabs(x);
  if (u >= 1.0) return 0.0;
  return (1.0 - u) * std::cos(kPi * u) + (alpha / kPi) * std::sin(kPi * u);
}

double falpha_fourier(double alpha, double t) {
  const double w = falpha_w(t);
  return ((alpha + 1.0) - (alpha - 1.0) * t * t / (kPi * kPi)) * w * w;
}

double triangle_fourier(double t) {
  const double s = sinc(0.5 * t);
  return s * s;
}

double ltheta_eval(double theta, double x) {
  const double u = std::fabs(x);
  if (u >= 1.0) return 0.0;
  return (1.0 - u) * (sinc(theta * (1.0 - u)) + std::cos(theta * x)) /
         (1.0 + sinc(theta));
}

double ltheta_fourier(double theta, double t) {
  const double s = sinc(0.5 * (theta - t)) + sinc(0.5 * (theta + t));
  return s * s / (2.0 * (1.0 + sinc(theta)));
}

// Transform of Beurling's odd part, entering the JBeta closed form:
//   S0(u) = 1/pi - 2/u + (1 - u/(2 pi)) cot(u/2),   0 < u < 2 pi.
double beurling_odd_factor(double u) {
  if (u < 1e-2) {
    const double u2 = u * u;
    return u * (-1.0 / 6.0 + u / (12.0 * kPi) - u2 / 360.0 +
                u2 * u / (720.0 * kPi));
  }
  return 1.0 / kPi - 2.0 / u + (1.0 - u / (2.0 * kPi)) * (std::cos(0.5 * u) / std::sin(0.5 * u));
}

double jbeta_eval(double beta, double x) {
  const double u = std::fabs(x);
  if (u >= 2.0 * kPi) return 0.0;
  if (u == 0.0) return 1.0;
  const double s = std::sin(beta * u);
  const double val = 2.0 * s / u - (1.0 - u / (2.0 * kPi)) * std::cos(beta * u) +
                     beurling_odd_factor(u) * s;
  return val / (2.0 * beta - 1.0);
}

// Dirichlet-type kernel sum_{m=-(beta-1)}^{beta-1} e^{imt} for integer beta.
double dirichlet_kernel(int beta, double t) {
  double d = 1.0;
  for (int m = 1; m < beta; ++m) d += 2.0 * std::cos(m * t);
  return d;
}

double gbeta_fourier(int beta, double t) {
  const double u = std::fabs(t);
  if (u >= 2.0 * kPi) return 0.0;
  return -std::sin(beta * u) / kPi - (1.0 - u / (2.0 * kPi)) * dirichlet_kernel(beta, u);
}

double galpha_scale(double alpha) { return kPi * kPi / (2.0 * (alpha + 2.0)); }

// Antiderivatives of F^alpha and of u F^alpha(u) on [0, 1], extended by
// parity.  They reduce the convolution with the triangle to endpoint terms.
double falpha_anti0(double alpha, double y) {
  const double a = std::fabs(y);
  double v;
  if (a >= 1.0) {
    v = 2.0 * (alpha + 1.0) / (kPi * kPi);
  } else {
    v = (1.0 - a) * std::sin(kPi * a) / kPi +
        (alpha + 1.0) * (1.0 - std::cos(kPi * a)) / (kPi * kPi);
  }
  return y < 0.0 ? -v : v;
}

double falpha_anti1(double alpha, double y) {
  const double a = std::min(std::fabs(y), 1.0);
  const double s = std::sin(kPi * a), c = std::cos(kPi * a);
  const double pi2 = kPi * kPi, pi3 = pi2 * kPi;
  return a * (1.0 - a) * s / kPi + (c - 1.0 - 2.0 * a * c) / pi2 +
         2.0 * s / pi3 + alpha * (s - kPi * a * c) / pi3;
}

double galpha_eval(double alpha, double x) {
  const double u = std::fabs(x);
  if (u >= 2.0) return 0.0;
  const double lo = std::max(-1.0, u - 1.0);
  const double hi = 1.0;
  auto seg = [&](double a, double b, double slope) {
    // int_a^b F(y) (1 + slope*(y - u)) dy with slope = +1 left of u, -1 right
    const double p0 = falpha_anti0(alpha, b) - falpha_anti0(alpha, a);
    const double p1 = falpha_anti1(alpha, b) - falpha_anti1(alpha, a);
    return (1.0 - slope * u) * p0 + slope * p1;
  };
  double total;
  if (u <= hi) {
    total = seg(lo, u, 1.0) + seg(u, hi, -1.0);
  } else {
    total = seg(lo, hi, 1.0);
  }
  return galpha_scale(alpha) * total;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::FAlpha: return "falpha";
    case Family::Triangle: return "triangle";
    case Family::GAlpha: return "galpha";
    case Family::Kernel: return "kernel";
    case Family::LTheta: return "ltheta";
    case Family::JBeta: return "jbeta";
    case Family::GBetaMinorant: return "gbeta";
  }
  return "?";
}

void validate(const TestFunction& f) {
  switch (f.family) {
    case Family::FAlpha:
    case Family::GAlpha:
      if (!(f.param > 1.0))
        throw domain_error(std::string(family_name(f.family)) +
                           ": alpha must be > 1");
      break;
    case Family::LTheta:
      if (!(f.param >= 0.0 && f.param <= kPi))
        throw domain_error("ltheta: theta must lie in [0, pi]");
      break;
    case Family::JBeta:
      if (!(f.param > 0.5)) throw domain_error("jbeta: beta must be > 1/2");
      break;
    case Family::GBetaMinorant:
      if (!(f.param >= 1.0 && f.param == std::floor(f.param)))
        throw domain_error("gbeta: beta must be a positive integer");
      break;
    case Family::Triangle:
    case Family::Kernel:
      break;
  }
}

double support_halfwidth(const TestFunction& f) {
  switch (f.family) {
    case Family::FAlpha:
    case Family::Triangle:
    case Family::Kernel:
    case Family::LTheta:
      return 1.0;
    case Family::GAlpha:
      return 2.0;
    case Family::JBeta:
      return 2.0 * kPi;
    case Family::GBetaMinorant:
      return kInf;
  }
  return kInf;
}

double eval(const TestFunction& f, double x) {
  validate(f);
  switch (f.family) {
    case Family::FAlpha: return falpha_eval(f.param, x);
    case Family::Triangle: {
      const double u = std::fabs(x);
      return u >= 1.0 ? 0.0 : 1.0 - u;
    }
    case Family::GAlpha: return galpha_eval(f.param, x);
    case Family::Kernel: return falpha_eval(1.0, x);
    case Family::LTheta: return ltheta_eval(f.param, x);
    case Family::JBeta: return jbeta_eval(f.param, x);
    case Family::GBetaMinorant: return -selberg_minorant(f.param, x);
  }
  return 0.0;
}

double fourier(const TestFunction& f, double t) {
  validate(f);
  switch (f.family) {
    case Family::FAlpha: return falpha_fourier(f.param, t);
    case Family::Triangle: return triangle_fourier(t);
    case Family::GAlpha:
      return galpha_scale(f.param) * falpha_fourier(f.param, t) * triangle_fourier(t);
    case Family::Kernel: return falpha_fourier(1.0, t);
    case Family::LTheta: return ltheta_fourier(f.param, t);
    case Family::JBeta: return selberg_minorant(f.param, t);
    case Family::GBetaMinorant:
      return gbeta_fourier(static_cast<int>(f.param), t);
  }
  return 0.0;
}

double transform_scale(const TestFunction& f) {
  if (f.family == Family::JBeta) return 2.0 * kPi / (2.0 * f.param - 1.0);
  return 1.0;
}

double fourier_numeric(const TestFunction& f, double t, double tol) {
  validate(f);
  if (!(tol > 0.0)) throw domain_error("fourier_numeric: tol must be > 0");
  if (f.family == Family::GBetaMinorant) {
    // Split off the pieces with exact transforms: the indicator of
    // [-beta,beta] and the matched pair of Fejer kernels; what remains
    // decays like x^-4 and is integrated directly.
    const int beta = static_cast<int>(f.param);
    const double u = std::fabs(t);
    const double kt = u >= 2.0 * kPi ? 0.0 : 1.0 - u / (2.0 * kPi);
    auto fejer = [](double z) {
      if (std::fabs(z) < 1e-9) return 1.0;
      const double s = sinpi(z) / (kPi * z);
      return s * s;
    };
    auto remainder = [&](double x) {
      double m = -selberg_minorant(f.param, x);
      if (std::fabs(x) <= beta) m += 1.0;
      return m - 0.5 * (fejer(x + beta) + fejer(beta - x));
    };
    const double X = std::max(200.0, std::cbrt(2.0 * beta / (3.0 * kPi * kPi * (0.25 * tol))));
    auto integrand = [&](double x) { return remainder(x) * std::cos(t * x); };
    // GL16 resolves ~0.9 of the fastest period per panel at machine accuracy.
    const double panel = 0.9 * std::min(1.0, 2.0 * kPi / (2.0 * kPi + u));
    // The remainder jumps at x = beta (indicator edge): keep it on a seam.
    const double tailint =
        2.0 * (integrate_composite(integrand, 0.0, beta, panel) +
               integrate_composite(integrand, beta, X, panel));
    return -2.0 * beta * sinc(beta * t) + std::cos(beta * t) * kt + tailint;
  }
  const double c = support_halfwidth(f);
  auto integrand = [&](double x) { return eval(f, x) * std::cos(t * x); };
  double v = 2.0 * integrate(integrand, 0.0, c, 0.25 * tol);
  if (f.family == Family::JBeta) v /= transform_scale(f);
  return v;
}

double sign_threshold(const TestFunction& f) {
  validate(f);
  switch (f.family) {
    case Family::FAlpha:
    case Family::GAlpha:
      return std::sqrt((f.param + 1.0) / (f.param - 1.0)) * kPi;
    case Family::JBeta:
      return f.param;
    case Family::Triangle:
    case Family::Kernel:
    case Family::LTheta:
      return kInf;
    case Family::GBetaMinorant:
      return 2.0 * kPi;  // transform vanishes identically beyond 2 pi
  }
  return kInf;
}

double sigma_weight(const TestFunction& f) {
  validate(f);
  if (f.family == Family::GBetaMinorant)
    throw domain_error("sigma_weight: gbeta is not compactly supported");
  if (f.family == Family::FAlpha) {
    const double a = f.param;
    return (6.0 * a * a + kPi * kPi - 3.0) / (12.0 * kPi * kPi);
  }
  const double c = support_halfwidth(f);
  auto g = [&](double u) {
    const double v = eval(f, u);
    return u * v * v;
  };
  return 2.0 * integrate(g, 0.0, c, 1e-12);
}

double galpha_convolution_quadrature(double alpha, double x) {
  const double u = std::fabs(x);
  if (u >= 2.0) return 0.0;
  const double lo = std::max(-1.0, u - 1.0);
  const double hi = 1.0;
  auto g = [&](double y) {
    return falpha_eval(alpha, y) * (1.0 - std::fabs(u - y));
  };
  // Kinks of the integrand sit at y = 0 and y = u.
  double cuts[4] = {lo, hi, 0.0, u};
  std::sort(cuts, cuts + 4);
  double total = 0.0;
  for (int i = 0; i + 1 < 4; ++i) {
    const double a = std::clamp(cuts[i], lo, hi);
    const double b = std::clamp(cuts[i + 1], lo, hi);
    if (b > a) total += integrate(g, a, b, 1e-12);
  }
  return galpha_scale(alpha) * total;
}

double phi_line(const TestFunction& f, double s, double dilation) {
  validate(f);
  const double c = support_halfwidth(f);
  if (!std::isfinite(c))
    throw domain_error("phi_line requires a compactly supported family");
  const double T = dilation;
  auto g = [&](double x) { return eval(f, x / T) * std::cosh((s - 0.5) * x); };
  return 2.0 * integrate(g, 0.0, c * T, 1e-11);
}

}  // namespace lowzero
