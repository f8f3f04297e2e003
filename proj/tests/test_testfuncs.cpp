#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "lowzero/errors.hpp"
#include "lowzero/quadrature.hpp"
#include "lowzero/specfun.hpp"
#include "lowzero/testfuncs.hpp"

using namespace lowzero;

namespace {
const std::vector<TestFunction> sample_set() {
  return {TestFunction::falpha(1.3),  TestFunction::falpha(3.0),
          TestFunction::falpha(17.0), TestFunction::triangle(),
          TestFunction::galpha(2.2),  TestFunction::galpha(6.0),
          TestFunction::kernel(),     TestFunction::ltheta(0.0),
          TestFunction::ltheta(1.1),  TestFunction::ltheta(kPi),
          TestFunction::jbeta(0.7),   TestFunction::jbeta(2.0),
          TestFunction::jbeta(3.6),   TestFunction::gbeta_minorant(1),
          TestFunction::gbeta_minorant(2), TestFunction::gbeta_minorant(3)};
}
}  // namespace

TEST_CASE("pointwise evaluation examples") {
  CHECK(eval(TestFunction::falpha(3.0), 0.0) == doctest::Approx(1.0));
  CHECK(eval(TestFunction::triangle(), 0.25) == doctest::Approx(0.75));
  CHECK(eval(TestFunction::gbeta_minorant(1), 0.5) ==
        doctest::Approx(-20.0 / (3.0 * kPi * kPi)).epsilon(1e-12));
  // F^alpha(x) <= (alpha-1)(1-x) for alpha >= 3 at a sample point
  CHECK(eval(TestFunction::falpha(3.0), 0.9) <= 2.0 * 0.1 + 1e-12);
}

TEST_CASE("closed-form transform values") {
  for (double a : {1.2, 2.6, 7.0, 31.0})
    CHECK(fourier(TestFunction::falpha(a), 0.0) ==
          doctest::Approx(4.0 * (a + 1.0) / (kPi * kPi)).epsilon(1e-13));
  // Removable singularity at t = pi gives 1/2 for every alpha.
  for (double a : {1.0 + 1e-9, 2.6, 7.0, 40.0})
    CHECK(fourier(TestFunction::falpha(a), kPi) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(fourier(TestFunction::triangle(), 0.0) == doctest::Approx(1.0));
  for (double a : {1.5, 3.0, 12.0})
    CHECK(fourier(TestFunction::galpha(a), 0.0) ==
          doctest::Approx(2.0 * (a + 1.0) / (a + 2.0)).epsilon(1e-13));
  CHECK(fourier(TestFunction::kernel(), 0.0) ==
        doctest::Approx(8.0 / (kPi * kPi)).epsilon(1e-13));
  for (int b : {1, 2, 3, 7})
    CHECK(fourier(TestFunction::gbeta_minorant(b), 0.0) ==
          doctest::Approx(1.0 - 2.0 * b).epsilon(1e-12));
}

TEST_CASE("quadrature transform oracle spot checks") {
  CHECK(std::fabs(fourier_numeric(TestFunction::triangle(), 2.0 * kPi, 1e-10)) < 1e-10);
  CHECK(fourier_numeric(TestFunction::falpha(2.6), 1.0, 1e-10) ==
        doctest::Approx(fourier(TestFunction::falpha(2.6), 1.0)).epsilon(1e-10));
  CHECK(fourier_numeric(TestFunction::ltheta(kPi), 0.0, 1e-10) ==
        doctest::Approx(8.0 / (kPi * kPi)).epsilon(1e-10));
}

TEST_CASE("sign thresholds") {
  CHECK(sign_threshold(TestFunction::falpha(2.6)) ==
        doctest::Approx(1.5 * kPi).epsilon(1e-13));
  CHECK(std::isinf(sign_threshold(TestFunction::triangle())));
  CHECK(sign_threshold(TestFunction::jbeta(0.8)) == doctest::Approx(0.8));
}

TEST_CASE("sigma weights") {
  // Closed form against the stated quadrature oracle.
  auto sigma_quad = [](const TestFunction& f) {
    const double c = support_halfwidth(f);
    return 2.0 * integrate(
                     [&](double u) {
                       const double v = eval(f, u);
                       return u * v * v;
                     },
                     0.0, c, 1e-12);
  };
  CHECK(sigma_weight(TestFunction::falpha(1.0 + 1e-12)) ==
        doctest::Approx((3.0 + kPi * kPi) / (12.0 * kPi * kPi)).epsilon(1e-10));
  CHECK(sigma_weight(TestFunction::triangle()) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  // Frozen from the quadrature oracle at the Theorem-7 optimum.
  CHECK(sigma_weight(TestFunction::falpha(1.8652)) ==
        doctest::Approx(0.23424856).epsilon(1e-6));
  CHECK(sigma_weight(TestFunction::falpha(1.8652)) ==
        doctest::Approx(sigma_quad(TestFunction::falpha(1.8652))).epsilon(1e-9));
  for (double a : {1.4, 2.6, 9.0})
    CHECK(sigma_weight(TestFunction::falpha(a)) ==
          doctest::Approx(sigma_quad(TestFunction::falpha(a))).epsilon(1e-9));
  CHECK_THROWS_AS(sigma_weight(TestFunction::gbeta_minorant(2)), domain_error);
}

TEST_CASE("evenness and normalization across the families") {
  for (const auto& f : sample_set()) {
    const double c = std::isfinite(support_halfwidth(f)) ? support_halfwidth(f) : 8.0;
    for (int i = 0; i <= 25; ++i) {
      const double x = c * i / 25.0;
      CHECK(eval(f, x) == doctest::Approx(eval(f, -x)).epsilon(1e-12));
    }
    if (f.family != Family::GBetaMinorant)
      CHECK(eval(f, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    if (std::isfinite(support_halfwidth(f))) {
      CHECK(eval(f, support_halfwidth(f) + 1e-9) == 0.0);
      CHECK(eval(f, 3.0 * support_halfwidth(f)) == 0.0);
    }
  }
}

TEST_CASE("closed vs quadrature transforms on a modest grid") {
  for (const auto& f : sample_set()) {
    for (double t : {0.0, 0.37, 1.0, 2.9, kPi, 5.5, 9.1}) {
      const double closed = fourier(f, t);
      const double numeric = fourier_numeric(f, t, 1e-10);
      CHECK(std::fabs(closed - numeric) < 1e-9);
    }
  }
}

TEST_CASE("FAlpha transform sign pattern") {
  for (double a : {1.05, 1.5, 2.6, 5.0, 13.0, 50.0}) {
    const TestFunction f = TestFunction::falpha(a);
    const double t0 = sign_threshold(f);
    for (int i = 0; i <= 40; ++i) {
      const double t = t0 + (10.0 * t0 - t0) * i / 40.0;
      CHECK(fourier(f, t) <= 1e-14);
    }
    for (int i = 0; i <= 40; ++i) {
      const double t = t0 * i / 40.0;
      CHECK(fourier(f, t) >= -1e-14);
    }
  }
}

TEST_CASE("linear bound on FAlpha for alpha >= 3") {
  for (double a : {3.0, 4.5, 10.0, 25.0})
    for (int i = 0; i <= 50; ++i) {
      const double x = i / 50.0;
      CHECK(eval(TestFunction::falpha(a), x) <= (a - 1.0) * (1.0 - x) + 1e-12);
    }
}

TEST_CASE("cubic bound on the kernel") {
  for (int i = 0; i <= 60; ++i) {
    const double x = i / 60.0;
    CHECK(eval(TestFunction::kernel(), x) <=
          4.0 * (1.0 - x) * (1.0 - x) * (1.0 - x) + 1e-12);
  }
}

TEST_CASE("GAlpha transform factorizes") {
  for (double a : {1.7, 3.0, 8.0})
    for (double t : {0.0, 0.9, 2.2, kPi, 6.6}) {
      const double lhs = fourier(TestFunction::galpha(a), t);
      const double rhs = kPi * kPi / (2.0 * (a + 2.0)) *
                         fourier(TestFunction::falpha(a), t) *
                         fourier(TestFunction::triangle(), t);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("GAlpha closed evaluation equals the defining convolution") {
  for (double a : {1.4, 2.6, 7.5})
    for (double x : {0.0, 0.3, 0.7, 1.0, 1.4, 1.9})
      CHECK(eval(TestFunction::galpha(a), x) ==
            doctest::Approx(galpha_convolution_quadrature(a, x)).epsilon(1e-10));
}

TEST_CASE("LTheta endpoints collapse to Triangle and Kernel") {
  for (int i = 0; i <= 30; ++i) {
    const double x = i / 30.0;
    CHECK(eval(TestFunction::ltheta(0.0), x) ==
          doctest::Approx(eval(TestFunction::triangle(), x)).epsilon(1e-12));
    CHECK(eval(TestFunction::ltheta(kPi), x) ==
          doctest::Approx(eval(TestFunction::kernel(), x)).epsilon(1e-12));
  }
}

TEST_CASE("g_beta sign pattern and decay") {
  for (int b : {1, 2, 3}) {
    const TestFunction f = TestFunction::gbeta_minorant(b);
    double cb = 0.0;
    for (double x = 0.0; x <= 40.0; x += 0.0613) {
      const double v = eval(f, x);
      if (x < b - 1e-9) CHECK(v <= 1e-12);
      if (x > b + 1e-9) CHECK(v >= -1e-12);
      cb = std::max(cb, std::fabs(v) * (1.0 + x * x));
    }
    // A single fitted constant witnesses g_beta << 1/(1+x^2).
    CHECK(cb < 10.0 * b);
    for (double x = 40.0; x <= 400.0; x += 7.7)
      CHECK(std::fabs(eval(f, x)) <= cb / (1.0 + x * x) + 1e-12);
  }
}

TEST_CASE("g_beta transform matches the sine main term up to O(1)") {
  for (int b : {1, 2, 3}) {
    double worst = 0.0;
    for (double t = -2.0 * kPi + 1e-3; t <= 2.0 * kPi; t += 0.05) {
      const double main = -2.0 * b * sinc(b * t);
      worst = std::max(worst,
                       std::fabs(fourier(TestFunction::gbeta_minorant(b), t) - main));
    }
    CHECK(worst < 2.0 * b);  // boundedness only
  }
}

TEST_CASE("JBeta transform sits below the interval indicator") {
  for (double b : {0.8, 1.0, 2.0, 3.7}) {
    const TestFunction f = TestFunction::jbeta(b);
    for (double t = 0.0; t <= 3.0 * b; t += b / 40.0) {
      const double ind = t <= b ? 1.0 : 0.0;
      CHECK(fourier(f, t) <= ind + 1e-12);
      if (t >= b) CHECK(fourier(f, t) <= 1e-12);
    }
  }
}

TEST_CASE("dilation identity for the line integral") {
  // Phi(F_T)(1/2 + i gamma) = T Fhat(T gamma), with the true transform
  // scale for JBeta.
  for (const auto& f : {TestFunction::triangle(), TestFunction::falpha(2.0),
                        TestFunction::jbeta(1.5)}) {
    const double c = support_halfwidth(f);
    for (double T : {0.8, 2.5})
      for (double g : {0.3, 1.1}) {
        const double lhs = 2.0 * integrate(
                               [&](double x) { return eval(f, x / T) * std::cos(g * x); },
                               0.0, c * T, 1e-11);
        const double rhs = T * transform_scale(f) * fourier(f, T * g);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
      }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(eval(TestFunction::falpha(1.0), 0.1), domain_error);
  CHECK_THROWS_AS(eval(TestFunction::galpha(0.9), 0.1), domain_error);
  CHECK_THROWS_AS(eval(TestFunction::ltheta(3.5), 0.1), domain_error);
  CHECK_THROWS_AS(eval(TestFunction::ltheta(-0.1), 0.1), domain_error);
  CHECK_THROWS_AS(eval(TestFunction::jbeta(0.5), 0.1), domain_error);
  CHECK_THROWS_AS(eval(TestFunction{Family::GBetaMinorant, 1.5}, 0.1), domain_error);
  CHECK_THROWS_AS(fourier_numeric(TestFunction::triangle(), 1.0, 0.0), domain_error);
}
