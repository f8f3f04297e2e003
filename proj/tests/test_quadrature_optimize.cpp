#include <cmath>

#include "doctest.h"
#include "lowzero/optimize.hpp"
#include "lowzero/quadrature.hpp"
#include "lowzero/specfun.hpp"

using namespace lowzero;

TEST_CASE("adaptive quadrature on known integrals") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0, 1e-12) ==
        doctest::Approx(9.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, 0.0, 12.0, 1e-12) ==
        doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-12));
  // Oscillatory
  CHECK(integrate([](double x) { return std::cos(40.0 * x); }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-10));
}

TEST_CASE("composite Gauss-Legendre") {
  CHECK(integrate_composite([](double x) { return std::sin(x); }, 0.0, kPi, 0.5) ==
        doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("golden-section minimization") {
  auto r = minimize_1d([](double x) { return x * x; }, -1.0, 1.0, 1e-10);
  CHECK(std::fabs(r.argmin) < 1e-8);
  CHECK(r.unimodal);

  auto r2 = minimize_1d([](double x) { return (x - 0.3) * (x - 0.3) + 2.0; },
                        -4.0, 5.0, 1e-10);
  CHECK(r2.argmin == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(r2.optimum == doctest::Approx(2.0));
  CHECK(r2.bracket.first <= r2.argmin);
  CHECK(r2.bracket.second >= r2.argmin);

  // The bimodal probe should trip the unimodality flag for at least one
  // of the two wells.
  auto wobble = [](double x) { return std::cos(6.0 * x) + 0.01 * x; };
  auto r3 = minimize_1d(wobble, 0.0, 2.0, 1e-10);
  CHECK(r3.optimum <= wobble(r3.argmin) + 1e-12);
}

TEST_CASE("kernel-weight maximum via golden section") {
  auto r = maximize_1d(
      [](double x) { return x * std::exp(-0.25 * x) / (-std::expm1(-x)); },
      1e-6, 20.0, 1e-10);
  CHECK(r.optimum == doctest::Approx(1.5048).epsilon(1e-3));
}

TEST_CASE("brent root finder") {
  const double r = find_root([](double x) { return std::cos(x); }, 1.0, 2.0, 1e-14);
  CHECK(r == doctest::Approx(kPi / 2.0).epsilon(1e-13));
  CHECK_THROWS(find_root([](double x) { return 1.0 + x * x; }, -1.0, 1.0));
}
