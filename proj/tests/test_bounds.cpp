#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "lowzero/bounds.hpp"
#include "lowzero/errors.hpp"
#include "lowzero/primes.hpp"
#include "lowzero/specfun.hpp"

using namespace lowzero;

TEST_CASE("theorem-1 bound evaluator") {
  const auto r = thm1_gamma_bound_logq(std::exp(10.0));
  CHECK(r.valid);
  CHECK(r.value ==
        doctest::Approx(kPi / 20.0 + kPi * (std::log(4.0) + 1.0) / 200.0).epsilon(1e-12));
  // Monotone decreasing along a loglog grid.
  double prev = 1e300;
  for (double L = 4.0; L <= 40.0; L += 2.0) {
    const double v = thm1_gamma_bound_logq(std::exp(L)).value;
    CHECK(v < prev);
    prev = v;
  }
  CHECK_FALSE(thm1_gamma_bound(100.0).valid);
  CHECK_THROWS_AS(thm1_gamma_bound(std::numeric_limits<double>::infinity()),
                  domain_error);
}

TEST_CASE("zero-count coefficient and the optimal a") {
  const double C = 3.0;
  const auto r = thm1_zero_count_logq(std::exp(10.0), C);
  CHECK(r.terms.at("coefficient") ==
        doctest::Approx(kPi * kPi / 8.0 * (C - std::log(4.0) - 1.0)).epsilon(1e-12));
  // Numeric argmax of the pre-optimized coefficient lands on 1/(C - log 4).
  const auto opt = maximize_1d([&](double a) { return thm1_zero_count_coeff(C, a); },
                               0.05, 3.0, 1e-11);
  CHECK(opt.argmin == doctest::Approx(1.0 / (C - std::log(4.0))).epsilon(1e-6));
  CHECK_THROWS_AS(thm1_zero_count(1e10, 1.0), domain_error);
}

TEST_CASE("theorem 2 and 3 structure") {
  for (double L : {5.0, 8.0, 15.0, 40.0}) {
    const double logq = std::exp(L);
    CHECK(thm2_n_bound_logq(logq).value * 2.0 * L / logq ==
          doctest::Approx(1.0 + (std::log(4.0) + 1.0) / L).epsilon(1e-12));
    CHECK(thm3_tilde_bound_logq(logq).terms.at("main") ==
          doctest::Approx(2.0 * thm1_gamma_bound_logq(logq).terms.at("main"))
              .epsilon(1e-12));
  }
  // Internal Delta optimality: d/dDelta (Delta/4 + 2 e^{-Delta/2}) = 0 at 2 log 4.
  const auto d = minimize_1d(
      [](double D) { return D / 4.0 + 2.0 * std::exp(-D / 2.0); }, 0.1, 10.0, 1e-11);
  CHECK(d.argmin == doctest::Approx(2.0 * std::log(4.0)).epsilon(1e-7));
  CHECK(thm2_n_bound(1e10).terms.at("delta_choice") ==
        doctest::Approx(2.0 * std::log(4.0)));
}

TEST_CASE("family bounds") {
  const double q = std::exp(100.0);
  CHECK(thm6_max_gamma(q).terms.at("second") ==
        doctest::Approx((0.5772156649 + std::log(8.0 * kPi)) / 400.0).epsilon(1e-9));
  for (double lg : {50.0, 100.0, 400.0}) {
    const double qq = std::exp(lg);
    CHECK(thm5_min_gamma(qq).value < 0.25);
    CHECK(thm6_max_gamma(qq).value > 0.25);
  }
  // Small-beta expansion behind the Theorem-6 constant: the rotated kernel
  // value matches (1 - bt)/2 to second order.
  auto lhs = [](double bt) {
    const double s = std::sin(kPi * bt / 2.0);
    const double d = 2.0 * kPi * kPi * bt + kPi * kPi * bt * bt;
    return 8.0 * kPi * kPi * (s / d) * (s / d);
  };
  double fitted = 0.0;
  for (double bt : {1e-2, 1e-3, 1e-4})
    fitted = std::max(fitted, std::fabs(lhs(bt) - 0.5 * (1.0 - bt)) / (bt * bt));
  CHECK(fitted < 2.0);
}

TEST_CASE("falpha optimum constants") {
  const auto& opt = falpha_optimum();
  CHECK(opt.alpha0 == doctest::Approx(1.8652).epsilon(3e-4));
  CHECK(opt.f0 == doctest::Approx(0.7757).epsilon(3e-4));
  CHECK(opt.beta0 == doctest::Approx(0.9098).epsilon(3e-4));
}

TEST_CASE("proportion curves") {
  CHECK(hr_proportion(1.0) ==
        doctest::Approx(1.0 - (123.0 + 9.0 * kPi * kPi) / (108.0 * kPi * kPi))
            .epsilon(1e-12));
  CHECK(hr_proportion(1e4) ==
        doctest::Approx((11.0 * kPi * kPi - 3.0) / (12.0 * kPi * kPi)).epsilon(1e-7));
  CHECK(thm7_proportion(2.0) ==
        doctest::Approx(1.0 / (1.0 + falpha_optimum().f0 / 16.0)).epsilon(1e-12));
  // Continuity across the branch point.
  const double b0 = falpha_optimum().beta0;
  CHECK(thm7_proportion(b0 - 1e-9) == doctest::Approx(thm7_proportion(b0 + 1e-9))
                                          .epsilon(1e-6));
  // Improvement over the variance route everywhere sampled, and range.
  double prev = 0.0;
  for (int i = 0; i <= 300; ++i) {
    const double b = 0.51 + (50.0 - 0.51) * i / 300.0;
    const double hr = hr_proportion(b), t7 = thm7_proportion(b);
    CHECK(t7 > hr);
    CHECK(t7 >= 0.0);
    CHECK(t7 <= 1.0);
    if (b >= b0) {
      CHECK(t7 >= prev - 1e-12);
      prev = t7;
    }
    if (hr > 0.0) CHECK(hr <= 1.0);
  }
  // The general-modulus remark gives something weaker but in range.
  for (double b : {0.7, 1.0, 3.0, 10.0}) {
    const double g = remark_general_q_proportion(b);
    CHECK(g >= 0.0);
    CHECK(g <= thm7_proportion(b));
  }
  CHECK(ltheta_proportion(0.0) == doctest::Approx(0.5));
  CHECK(ltheta_proportion(0.25) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(hr_proportion(0.4), domain_error);
  CHECK_THROWS_AS(ltheta_proportion(0.3), domain_error);
}

TEST_CASE("quadratic-family proportion") {
  CHECK(quadratic_feasibility_boundary() ==
        doctest::Approx(kPi / (2.0 * std::sqrt(kPi * kPi - 4.0))).epsilon(1e-15));
  CHECK(quadratic_feasibility_boundary() == doctest::Approx(0.6489).epsilon(1e-3));
  CHECK_THROWS_AS(quadratic_proportion(0.64), domain_error);
  // Dense-grid oracle at beta = 1 plus the frozen regression value.
  const double golden = quadratic_proportion(1.0);
  double dense = 0.0;
  for (int i = 1; i < 10000; ++i) {
    const double alpha = 1.0 + 9.0 * i / 10000.0;
    const double g1 = std::sqrt((alpha + 1.0) / (alpha - 1.0)) * (alpha + 1.0);
    if (!(g1 < kPi * kPi) ||
        !(std::sqrt((alpha + 1.0) / (alpha - 1.0)) < 2.0))
      continue;
    const double g = g1 / (kPi * kPi);
    const double N = 1.0 - g;
    const double D = 1.0 - 2.0 * g + falpha_f(alpha) / 2.0;
    if (D > 0.0 && N > 0.0) dense = std::max(dense, N * N / D);
  }
  CHECK(golden == doctest::Approx(dense).epsilon(1e-6));
  CHECK(golden == doctest::Approx(0.6728703).epsilon(1e-5));
  // The inner optimum sits strictly inside the feasible alpha interval.
  for (double b : {0.8, 1.0, 1.5}) {
    int arg = -1;
    double best = -1.0;
    const int n = 4000;
    for (int i = 1; i < n; ++i) {
      const double alpha = 1.0 + (kPi * kPi * b - 1.0) * i / n;
      const double g1 = std::sqrt((alpha + 1.0) / (alpha - 1.0)) * (alpha + 1.0);
      if (!(g1 < kPi * kPi * b) ||
          !(std::sqrt((alpha + 1.0) / (alpha - 1.0)) < 2.0 * b))
        continue;
      const double g = g1 / (kPi * kPi * b);
      const double D = 1.0 - 2.0 * g + falpha_f(alpha) / (2.0 * b * b);
      const double v = D > 0.0 ? (1.0 - g) * (1.0 - g) / D : 0.0;
      if (v > best) {
        best = v;
        arg = i;
      }
    }
    // Interior: neighbors on both sides are feasible and no better.
    CHECK(arg > 1);
    CHECK(arg < n - 1);
    CHECK(best == doctest::Approx(quadratic_proportion(b)).epsilon(1e-4));
  }
  // Slack constraints push the proportion to 1.
  CHECK(quadratic_proportion(1e3) > 0.999);
  // In range across the curve.
  for (double b = 0.66; b <= 6.0; b += 0.11) {
    const double v = quadratic_proportion(b);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("section-5 numeric search") {
  const Section5Max m = section5_beta_max();
  CHECK(m.beta == doctest::Approx(0.7229).epsilon(7e-4));
  CHECK(std::fabs(m.t_coef - 0.83) <= 0.01);
  // Binding equality at the optimum (bisection oracle).
  const double target = 0.5 * (1.0 / m.t_coef - 4.0 / (kPi * kPi));
  const double kh = fourier(TestFunction::kernel(), 2.0 * kPi * m.beta * m.t_coef);
  CHECK(kh == doctest::Approx(target).epsilon(1e-6));
  // Interval-length endpoints.
  CHECK(section5_lambda(0.0) <= 0.6 + 1e-9);
  CHECK(section5_lambda(0.7229) <= 0.915);
}

TEST_CASE("localized interval bound") {
  // Continuity at the breakpoint and the closed endpoint value.
  CHECK(interval_min_bound(0.75 - 1e-12) ==
        doctest::Approx(interval_min_bound(0.75 + 1e-12)).epsilon(1e-9));
  CHECK(interval_min_bound(0.75) ==
        doctest::Approx(std::sqrt(kPi * kPi / (kPi * kPi - 2.0))).epsilon(1e-12));
  CHECK(interval_min_bound(1.0) ==
        doctest::Approx(kPi / (2.0 * std::sqrt(kPi * kPi - 4.0))).epsilon(1e-12));
  double prev = 1e300;
  for (double a = 0.05; a <= 1.0; a += 0.05) {
    const double v = interval_min_bound(a);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(interval_min_bound(0.0), domain_error);
}

TEST_CASE("effective threshold search") {
  const PrimeTable table = build_table(800);
  const EffectiveQ0 base = effective_q0(1.0, 2.6, table, 2e-2);
  CHECK(base.q0 == doctest::Approx(kPi * std::exp(base.C)).epsilon(1e-12));
  // The maximum sits on the T'' edge; the report must flag that.
  const double Tmax = std::sqrt(3.6 / 1.6) * kPi;
  CHECK(base.argmax_T == doctest::Approx(Tmax).epsilon(1e-6));
  CHECK_FALSE(base.interior);
  // Near-optimality of the alpha choice: the grid minimum of q0 over
  // [2.0, 3.5] stays within 5% of the alpha = 2.6 value.
  double qmin = 1e300;
  for (double a = 2.0; a <= 3.51; a += 0.1)
    qmin = std::min(qmin, effective_q0(1.0, a, table, 2e-2).q0);
  CHECK(std::fabs(qmin - base.q0) / base.q0 < 0.05);
  CHECK_THROWS_AS(effective_q0(1.0, 2.6, build_table(50), 1e-2), capacity_error);
  CHECK_THROWS_AS(effective_q0(-1.0, 2.6, table), domain_error);
}

TEST_CASE("explicit gamma bound for large conductor") {
  const auto r = thm14_bound(1e24);
  const double L = std::log(std::log(1e24));
  CHECK(r.valid);
  CHECK(r.value == doctest::Approx((kPi / 2.0) / (L - 1.43) *
                                   std::sqrt(L / (L - 2.0))).epsilon(1e-12));
  CHECK_FALSE(thm14_bound(1e20).valid);
  const auto v = thm14_verify();
  CHECK(v.ok);
  CHECK(v.kernel_max == doctest::Approx(1.5049).epsilon(1e-3));
  CHECK(v.kernel_integral == doctest::Approx(17.197).epsilon(1e-4));
  CHECK(v.digamma_const <= 4.228);
  CHECK(v.psi_slope_4x == doctest::Approx(4.0 * 1.039));
  CHECK(v.psi_slope_2x == doctest::Approx(2.0 * 1.039));
}

TEST_CASE("helper lower bound for T") {
  // Direct claim: on a dense scan, aT + b e^T/T^3 >= c forces T >= bound.
  std::mt19937 rng(0);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = 0.1 + 1.9 * U(rng);
    const double b = 0.1 + 1.9 * U(rng);
    const double c = 10.0 + 990.0 * U(rng);
    const double Delta = 0.05 + 1.95 * U(rng);
    const double bound = helper_T_lower(a, b, c, Delta);
    for (double T = 3.0; T <= 60.0; T += 0.0173) {
      const double expr = a * T + b * std::exp(T) / (T * T * T);
      if (expr >= c) CHECK(T >= bound - 1e-9);
    }
  }
  // Degenerate cases.
  CHECK(helper_T_lower(1.0, 1.0, 1e9, 1.0) ==
        doctest::Approx(std::log(5e8) + 3.0 * std::log(std::log(5e8))).epsilon(1e-12));
  CHECK(helper_T_lower(1.0, 1e12, 10.0, 1e-9) ==
        doctest::Approx(10.0 / (1.0 + 1e-9)).epsilon(1e-12));
  CHECK_THROWS_AS(helper_T_lower(-1.0, 1.0, 1.0, 1.0), domain_error);
}

TEST_CASE("figure tables") {
  const Table f1 = figure_data(Figure::Fig1, 1.0, 1.0, 1.0);
  REQUIRE(f1.rows.size() == 1);
  CHECK(f1.rows[0][0] == doctest::Approx(1.0));
  CHECK(f1.rows[0][1] == doctest::Approx(0.8013).epsilon(1e-3));
  CHECK(f1.rows[0][2] == doctest::Approx(0.8376).epsilon(1e-3));
  const Table f1g = figure_data(Figure::Fig1, 0.51, 5.0, 0.01);
  for (const auto& row : f1g.rows) CHECK(row[2] >= row[1]);
  const Table f2 = figure_data(Figure::Fig2, 0.649, 1.2, 0.01);
  CHECK(f2.rows.front()[0] == doctest::Approx(0.649));
  CHECK(f2.columns.size() == 2);
}

TEST_CASE("deterministic reports") {
  const auto a = thm1_gamma_bound(1e30);
  const auto b = thm1_gamma_bound(1e30);
  CHECK(a.value == b.value);
  CHECK(a.terms == b.terms);
}
