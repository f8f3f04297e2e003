#include "lowzero/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lowzero/archimedean.hpp"
#include "lowzero/errors.hpp"
#include "lowzero/specfun.hpp"
#include "lowzero/testfuncs.hpp"

namespace lowzero {

namespace {
const double kLog4 = std::log(4.0);
double loglog(double q) { return std::log(std::log(q)); }
double checked_logq(double q) {
  if (!(q > 1.0) || !std::isfinite(q))
    throw domain_error("conductor out of double range; use the _logq form");
  return std::log(q);
}
}  // namespace

double zero_count_main(double q, double t, double chi_minus1) {
  return t / kPi * std::log(q * t / (2.0 * kPi * std::exp(1.0))) -
         chi_minus1 / 4.0;
}

double zero_count_band(double q, double t) {
  const double ell = std::log(q * (t + 2.0) / (2.0 * kPi));
  return 0.22737 * ell + 2.0 * std::log1p(ell) - 0.5;
}

bool zero_count_band_valid(double q, double t) {
  if (t < 5.0 / 7.0) return false;
  return std::log(q * (t + 2.0) / (2.0 * kPi)) > 1.567;
}

// ---- individual-chi bounds --------------------------------------------

BoundReport thm1_gamma_bound(double q) {
  return thm1_gamma_bound_logq(checked_logq(q));
}

BoundReport thm1_gamma_bound_logq(double logq) {
  BoundReport r;
  r.theorem_id = "gamma1_individual";
  r.input["logq"] = logq;
  const double L = std::log(logq);
  r.valid = L > 3.0;
  const double main = kPi / (2.0 * L);
  const double second = kPi * (kLog4 + 1.0) / (2.0 * L * L);
  r.terms["main"] = main;
  r.terms["second"] = second;
  r.terms["error_budget"] = 1.0 / (L * L * L);
  r.value = main + second;
  return r;
}

double thm1_zero_count_coeff(double C, double a) {
  if (a <= 0.0) a = 1.0 / (C - kLog4);
  return kPi * kPi / 4.0 * (1.0 - 4.0 * a * std::exp(-C + 1.0 / a)) / (2.0 * a);
}

BoundReport thm1_zero_count(double q, double C) {
  return thm1_zero_count_logq(checked_logq(q), C);
}

BoundReport thm1_zero_count_logq(double logq, double C) {
  if (!(C > kLog4 + 1.0))
    throw domain_error("thm1_zero_count requires C > log4 + 1");
  BoundReport r;
  r.theorem_id = "zero_count_individual";
  r.input["logq"] = logq;
  r.input["C"] = C;
  const double L = std::log(logq);
  r.valid = L > 3.0;
  const double a = 1.0 / (C - kLog4);
  r.terms["optimal_a"] = a;
  r.terms["coefficient"] = thm1_zero_count_coeff(C);
  r.terms["count_convention"] = 2.0;  // two-sided in gamma
  r.value = r.terms["coefficient"] * logq / (L * L);
  return r;
}

BoundReport thm2_n_bound(double q) { return thm2_n_bound_logq(checked_logq(q)); }

BoundReport thm2_n_bound_logq(double logq) {
  BoundReport r;
  r.theorem_id = "central_order_individual";
  r.input["logq"] = logq;
  const double L = std::log(logq);
  r.valid = L > 3.0;
  const double main = logq / (2.0 * L);
  const double second = (kLog4 + 1.0) * logq / (2.0 * L * L);
  r.terms["main"] = main;
  r.terms["second"] = second;
  r.terms["delta_choice"] = 2.0 * kLog4;
  r.terms["error_budget"] = logq / (L * L * L);
  r.value = main + second;
  return r;
}

BoundReport thm3_tilde_bound(double q) {
  return thm3_tilde_bound_logq(checked_logq(q));
}

BoundReport thm3_tilde_bound_logq(double logq) {
  BoundReport r;
  r.theorem_id = "gamma1_nonreal_individual";
  r.input["logq"] = logq;
  const double L = std::log(logq);
  r.valid = L > 3.0;
  const double main = kPi / L;
  const double second = kPi * (kLog4 + 1.0) / (L * L);
  r.terms["main"] = main;
  r.terms["second"] = second;
  r.terms["error_budget"] = 1.0 / (L * L * L);
  r.value = main + second;
  return r;
}

// ---- family bounds -------------------------------------------------------

BoundReport thm4_average_vanishing(double q) {
  BoundReport r;
  r.theorem_id = "family_average_vanishing";
  r.input["q"] = q;
  r.valid = q > 10.0;
  r.terms["main"] = 0.5;
  r.terms["second"] = -loglog(q) / (2.0 * std::log(q));
  r.terms["error_budget"] = std::log(loglog(q) + 1.0) / std::log(q);
  r.value = r.terms["main"] + r.terms["second"];
  return r;
}

BoundReport thm5_min_gamma(double q) {
  BoundReport r;
  r.theorem_id = "family_min_gamma";
  r.input["q"] = q;
  r.valid = q > 10.0;
  r.terms["main"] = 0.25;
  r.terms["second"] = -loglog(q) / (4.0 * std::log(q));
  r.terms["error_budget"] = std::log(loglog(q) + 1.0) / std::log(q);
  r.value = r.terms["main"] + r.terms["second"];
  return r;
}

BoundReport thm6_max_gamma(double q) {
  BoundReport r;
  r.theorem_id = "family_max_gamma";
  r.input["q"] = q;
  r.valid = q > 10.0;
  r.terms["main"] = 0.25;
  r.terms["second"] = (kEulerGamma + std::log(8.0 * kPi)) / (4.0 * std::log(q));
  r.terms["error_budget"] = 1.0 / (std::log(q) * std::log(q));
  r.value = r.terms["main"] + r.terms["second"];
  return r;
}

// ---- proportion curves ----------------------------------------------------

double falpha_f(double alpha) {
  return (6.0 * alpha * alpha + kPi * kPi - 3.0) * (alpha + 1.0) /
         (12.0 * kPi * kPi * (alpha - 1.0));
}

const FAlphaOptimum& falpha_optimum() {
  static const FAlphaOptimum opt = [] {
    const OptimizationResult r = minimize_1d(falpha_f, 1.0 + 1e-8, 50.0, 1e-11);
    FAlphaOptimum o;
    o.alpha0 = r.argmin;
    o.f0 = r.optimum;
    o.beta0 = std::sqrt((r.argmin + 1.0) / (r.argmin - 1.0)) / 2.0;
    return o;
  }();
  return opt;
}

namespace {
double hr_numerator(double beta) {
  const double b2 = beta * beta, b4 = b2 * b2;
  return 3.0 + kPi * kPi + 72.0 * b2 - 8.0 * kPi * kPi * b2 + 48.0 * b4 +
         16.0 * kPi * kPi * b4;
}
double hr_ratio(double beta) {
  const double d = 4.0 * beta * beta - 1.0;
  return hr_numerator(beta) / (12.0 * kPi * kPi * d * d);
}
}  // namespace

double hr_proportion(double beta) {
  if (!(beta > 0.5)) throw domain_error("hr_proportion requires beta > 1/2");
  return 1.0 - hr_ratio(beta);
}

double thm7_proportion(double beta) {
  if (!(beta > 0.5)) throw domain_error("thm7_proportion requires beta > 1/2");
  const auto& opt = falpha_optimum();
  if (beta < opt.beta0) return 1.0 / (1.0 + hr_ratio(beta));
  return 1.0 / (1.0 + opt.f0 / (4.0 * beta * beta));
}

double remark_general_q_proportion(double beta) {
  if (!(beta > 0.5))
    throw domain_error("remark_general_q requires beta > 1/2");
  const double b2 = beta * beta;
  const double alpha_lo = (4.0 * b2 + 1.0) / (4.0 * b2 - 1.0);
  auto objective = [&](double alpha) {
    const double fa = falpha_f(alpha);
    return fa / (4.0 * b2) + std::sqrt(fa) / beta;
  };
  const OptimizationResult r =
      minimize_1d(objective, alpha_lo, std::max(60.0, 2.0 * alpha_lo), 1e-10);
  return 1.0 / (1.0 + r.optimum);
}

double ltheta_proportion(double beta) {
  if (!(beta >= 0.0 && beta <= 0.25))
    throw domain_error("ltheta_proportion requires beta in [0, 1/4]");
  return 1.0 - 1.0 / (1.0 + sinc(4.0 * kPi * beta));
}

// ---- quadratic family -------------------------------------------------------

double quadratic_feasibility_boundary() {
  return kPi / (2.0 * std::sqrt(kPi * kPi - 4.0));
}

namespace {
double quad_g1(double alpha) {
  return std::sqrt((alpha + 1.0) / (alpha - 1.0)) * (alpha + 1.0);
}
double quad_ratio(double alpha, double beta) {
  const double g = quad_g1(alpha) / (kPi * kPi * beta);
  const double numer = 1.0 - g;
  if (numer <= 0.0) return 0.0;
  const double denom = 1.0 - 2.0 * g + falpha_f(alpha) / (2.0 * beta * beta);
  if (denom <= 0.0) return 0.0;
  return numer * numer / denom;
}
}  // namespace

double quadratic_proportion(double beta) {
  if (!(beta > quadratic_feasibility_boundary()))
    throw domain_error("quadratic_proportion: beta below pi/(2 sqrt(pi^2-4))");
  // Feasible alpha: sqrt((a+1)/(a-1)) (a+1) < pi^2 beta and
  // sqrt((a+1)/(a-1)) < 2 beta.  The second gives alpha >= alpha_lo, and
  // at alpha_lo the first reads 16 b^3/(4b^2-1) < pi^2 b, which is the
  // feasibility boundary itself, so [alpha_lo, alpha_hi) is the interval
  // with alpha_hi the g1 crossing beyond max(2, alpha_lo).
  const double b2 = beta * beta;
  const double cap = kPi * kPi * beta;
  const double alpha_lo = (4.0 * b2 + 1.0) / (4.0 * b2 - 1.0);
  double lo = std::max(2.0, alpha_lo), hi = cap;  // g1(cap) > cap
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (quad_g1(mid) < cap ? lo : hi) = mid;
  }
  const double alpha_hi = lo;
  if (!(alpha_hi > alpha_lo))
    throw domain_error("quadratic_proportion: empty feasible set");

  // 200-point guard scan, then a golden refinement around the best point.
  const int kScan = 200;
  double best_a = alpha_lo, best_v = -1.0;
  for (int i = 1; i < kScan; ++i) {
    const double alpha = alpha_lo + (alpha_hi - alpha_lo) * i / kScan;
    const double v = quad_ratio(alpha, beta);
    if (v > best_v) {
      best_v = v;
      best_a = alpha;
    }
  }
  const double width = (alpha_hi - alpha_lo) / kScan;
  const OptimizationResult r = maximize_1d(
      [&](double a) { return quad_ratio(a, beta); },
      std::max(alpha_lo + 1e-12, best_a - 2.0 * width),
      std::min(alpha_hi - 1e-12, best_a + 2.0 * width), 1e-10);
  return std::max(0.0, std::max(best_v, r.optimum));
}

namespace {
// K^(t) is strictly decreasing on [0, 3 pi]; invert by bisection.
double khat(double t) { return fourier(TestFunction::kernel(), t); }
double khat_inverse(double y) {
  double lo = 0.0, hi = 3.0 * kPi - 1e-9;
  if (y >= khat(0.0)) return 0.0;
  if (y <= 0.0) return hi;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (khat(mid) > y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double section5_beta_of_c(double c) {
  const double target = 0.5 * (1.0 / c - 4.0 / (kPi * kPi));
  if (target >= khat(0.0)) return 0.0;
  return khat_inverse(target) / (2.0 * kPi * c);
}
}  // namespace

Section5Max section5_beta_max() {
  const OptimizationResult r =
      maximize_1d(section5_beta_of_c, 0.5, 0.999, 1e-9);
  return {r.optimum, r.argmin};
}

double section5_lambda(double beta) {
  if (!(beta >= 0.0 && beta <= 0.73))
    throw domain_error("section5_lambda requires beta in [0, 0.7229...]");
  double best = 1.0;
  const int kThetaGrid = 64;
  for (int i = 0; i <= kThetaGrid; ++i) {
    const double theta = kPi * static_cast<double>(i) / kThetaGrid;
    const TestFunction f = TestFunction::ltheta(theta);
    const double f0 = fourier(f, 0.0);
    auto feasible = [&](double c) {
      // min of the transform over [0, 2 pi beta c] (it is nonnegative).
      const double X = 2.0 * kPi * beta * c;
      double fmin = fourier(f, X);
      for (int k = 0; k <= 32; ++k)
        fmin = std::min(fmin, fourier(f, X * k / 32.0));
      if (fmin <= 0.0) return false;
      return (1.0 / c - 0.5 * f0) / fmin < 2.0;
    };
    // Smallest feasible c in (0, 1).
    double c_min = -1.0;
    const int kCScan = 400;
    for (int k = 1; k < kCScan; ++k) {
      const double c = static_cast<double>(k) / kCScan;
      if (feasible(c)) {
        double lo = c - 1.0 / kCScan, hi = c;
        for (int it = 0; it < 50; ++it) {
          const double mid = 0.5 * (lo + hi);
          (feasible(mid) ? hi : lo) = mid;
        }
        c_min = hi;
        break;
      }
    }
    if (c_min < 0.0) continue;
    best = std::min(best, std::min(0.5 * (1.0 + c_min), 1.5 * c_min));
  }
  return best;
}

double interval_min_bound(double a) {
  if (!(a > 0.0 && a <= 1.0))
    throw domain_error("interval_min_bound requires a in (0, 1]");
  if (a <= 0.75) {
    const double A = 3.0 * kPi * kPi / (4.0 * a);
    return 3.0 / (4.0 * a) * std::sqrt(A / (A - 2.0));
  }
  const double B = kPi * kPi / (4.0 * a - 2.0);
  return 1.0 / (4.0 * a - 2.0) * std::sqrt(B / (B - 2.0));
}

// ---- effective estimates -----------------------------------------------------

EffectiveQ0 effective_q0(double t0, double alpha, const PrimeTable& table,
                         double grid_step) {
  if (!(t0 > 0.0)) throw domain_error("effective_q0 requires t0 > 0");
  const TestFunction f = TestFunction::falpha(alpha);
  const double Tmax = sign_threshold(f) / t0;
  if (std::exp(Tmax) > static_cast<double>(table.limit) + 0.5)
    throw capacity_error("effective_q0: sieve limit below e^{T''}");

  auto value_at = [&](double T) {
    const double ia = std::max(i_arch(f, T, 0.0, 1e-9), i_arch(f, T, 1.0, 1e-9));
    return ia + 2.0 * weighted_sum(f, T, WeightTwist::none(), table);
  };

  double bestT = grid_step, bestV = -1e300;
  for (double T = grid_step; T <= Tmax + 1e-12; T += grid_step) {
    const double v = value_at(std::min(T, Tmax));
    if (v > bestV) {
      bestV = v;
      bestT = std::min(T, Tmax);
    }
  }
  // Local refinement at a tenth of the grid step around the argmax, plus
  // the exact interval edge.
  const double fine = grid_step / 10.0;
  for (double T = std::max(fine, bestT - grid_step); T <= std::min(Tmax, bestT + grid_step) + 1e-12;
       T += fine) {
    const double v = value_at(T);
    if (v > bestV) {
      bestV = v;
      bestT = T;
    }
  }
  if (const double v = value_at(Tmax); v > bestV) {
    bestV = v;
    bestT = Tmax;
  }
  EffectiveQ0 out;
  out.C = bestV;
  out.q0 = kPi * std::exp(bestV);
  out.argmax_T = bestT;
  out.interior = bestT > 2.0 * grid_step && bestT < Tmax - 2.0 * grid_step;
  return out;
}

BoundReport thm14_bound(double q) {
  BoundReport r;
  r.theorem_id = "gamma1_effective";
  r.input["q"] = q;
  const double L = loglog(q);
  r.valid = q >= 1e24;
  r.terms["denominator_shift"] = 1.43;
  r.value = (kPi / 2.0) / (L - 1.43) * std::sqrt(L / (L - 2.0));
  return r;
}

Thm14Verification thm14_verify() {
  Thm14Verification v;
  const auto [mx, integral] = kernel_max_and_integral();
  v.kernel_max = mx;
  v.kernel_integral = integral;
  v.digamma_const = kEulerGamma + 3.0 * std::log(2.0) + kPi / 2.0;
  v.psi_slope_2x = 2.0 * 1.039;
  v.psi_slope_4x = 4.0 * 1.039;
  v.chain_ok = true;
  const double L_lo = loglog(1e24);
  for (int i = 0; i <= 400; ++i) {
    const double L = L_lo + (100.0 - L_lo) * i / 400.0;
    const double am1 = L - 2.0;  // alpha - 1 with alpha = loglog q - 1
    const double logq = std::exp(L);
    const double fq = (logq + 0.573 * am1 - 5.373) / (4.156 * am1);
    if (!(fq > std::exp(1.0) + 0.2)) {
      v.chain_ok = false;
      break;
    }
    const double lf = std::log(fq), llf = std::log(lf);
    const double half_T = lf + llf + std::log1p(llf / lf);
    if (!(half_T >= L - 1.43)) {
      v.chain_ok = false;
      break;
    }
  }
  v.ok = v.chain_ok && v.kernel_max <= 1.505 &&
         std::fabs(v.kernel_max - 1.5049) <= 1e-3 &&
         std::fabs(v.kernel_integral - 17.197) <= 1e-3 &&
         v.digamma_const <= 4.228 &&
         std::fabs(0.573 - (2.078 - 1.505)) < 1e-12 &&
         (4.228 + std::log(kPi)) <= 5.373;
  return v;
}

double helper_T_lower(double a, double b, double c, double Delta) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0 && Delta > 0.0))
    throw domain_error("helper_T_lower requires positive arguments");
  const double first = c / ((1.0 + Delta) * a);
  const double x = Delta * c / ((1.0 + Delta) * b);
  if (x <= 1.0) return first;
  const double second = std::log(x) + 3.0 * std::log(std::log(x));
  if (!std::isfinite(second)) return first;
  return std::min(first, second);
}

// ---- figure data -----------------------------------------------------------------

Table figure_data(Figure which, double beta_lo, double beta_hi, double step) {
  if (!(step > 0.0) || !(beta_hi >= beta_lo))
    throw domain_error("figure_data: bad grid");
  Table t;
  if (which == Figure::Fig1) {
    t.columns = {"beta", "hr_proportion", "thm7_proportion"};
    for (double b = beta_lo; b <= beta_hi + 1e-12; b += step)
      t.rows.push_back({b, hr_proportion(b), thm7_proportion(b)});
  } else {
    t.columns = {"beta", "quadratic_proportion"};
    for (double b = beta_lo; b <= beta_hi + 1e-12; b += step)
      t.rows.push_back({b, quadratic_proportion(b)});
  }
  return t;
}

}  // namespace lowzero
