#ifndef LOWZERO_TESTFUNCS_HPP
#define LOWZERO_TESTFUNCS_HPP

#include <string>

namespace lowzero {

// The admissible test functions fed into the explicit formula, together
// with their closed-form Fourier transforms (convention
// F^(t) = int F(x) e^{itx} dx).
//
//   FAlpha            (1-|x|)cos(pi x) + (alpha/pi) sin(pi |x|) on [-1,1]
//   Triangle          1-|x| on [-1,1]
//   GAlpha            pi^2/(2(alpha+2)) * (FAlpha conv Triangle), on [-2,2]
//   Kernel            FAlpha with alpha = 1
//   LTheta            interpolates Triangle (theta=0) .. Kernel (theta=pi)
//   JBeta             normalized transform of the Beurling-Selberg minorant
//                     of [-beta,beta]; supported in [-2pi, 2pi]
//   GBetaMinorant     negated Beurling-Selberg minorant itself (integer
//                     beta); not compactly supported, decays like 1/x^2
enum class Family {
  FAlpha,
  Triangle,
  GAlpha,
  Kernel,
  LTheta,
  JBeta,
  GBetaMinorant,
};

struct TestFunction {
  Family family = Family::Triangle;
  double param = 0.0;

  static TestFunction falpha(double alpha) { return {Family::FAlpha, alpha}; }
  static TestFunction triangle() { return {Family::Triangle, 0.0}; }
  static TestFunction galpha(double alpha) { return {Family::GAlpha, alpha}; }
  static TestFunction kernel() { return {Family::Kernel, 1.0}; }
  static TestFunction ltheta(double theta) { return {Family::LTheta, theta}; }
  static TestFunction jbeta(double beta) { return {Family::JBeta, beta}; }
  static TestFunction gbeta_minorant(int beta) {
    return {Family::GBetaMinorant, static_cast<double>(beta)};
  }
};

// Throws domain_error naming the violated constraint.
void validate(const TestFunction& f);

const char* family_name(Family f);

// Support half-width; +inf for GBetaMinorant.
double support_halfwidth(const TestFunction& f);

double eval(const TestFunction& f, double x);

// Closed-form transform.  For JBeta this is the transform normalized by
// (2 beta - 1)/(2 pi), i.e. the Beurling-Selberg minorant itself, so that
// fourier(JBeta, t) <= indicator of [-beta, beta] pointwise.
double fourier(const TestFunction& f, double t);

// Ratio true transform / fourier(); 2 pi/(2 beta - 1) for JBeta, else 1.
double transform_scale(const TestFunction& f);

// Quadrature of the defining integral (same normalization as fourier()).
double fourier_numeric(const TestFunction& f, double t, double tol);

// Smallest t0 with fourier(f, t) <= 0 for all |t| >= t0 (+inf when the
// transform is nonnegative).
double sign_threshold(const TestFunction& f);

// sigma(F) = int_{-c}^{c} |u| F(u)^2 du over the support.
double sigma_weight(const TestFunction& f);

// Phi(F)(s) = int F(x) e^{(s-1/2)x} dx for real s; compact support only.
double phi_line(const TestFunction& f, double s, double dilation = 1.0);

// The defining convolution integral for GAlpha, by adaptive quadrature.
// Slow; eval() uses the equivalent endpoint/antiderivative form.
double galpha_convolution_quadrature(double alpha, double x);

}  // namespace lowzero

#endif
