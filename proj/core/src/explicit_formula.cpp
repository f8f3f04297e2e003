#include "lowzero/explicit_formula.hpp"

#include <cmath>

#include "lowzero/archimedean.hpp"
#include "lowzero/bounds.hpp"
#include "lowzero/errors.hpp"
#include "lowzero/quadrature.hpp"
#include "lowzero/specfun.hpp"
#include "lowzero/summation.hpp"

namespace lowzero {

WeilEvaluation weil_rhs(const CharacterTable& table, std::size_t index,
                        const TestFunction& f, double T,
                        const PrimeTable& primes) {
  const Character& c = table.character(index);
  if (!c.primitive || c.principal)
    throw domain_error("weil_rhs requires a primitive non-principal character");
  WeilEvaluation ev;
  ev.q = table.modulus();
  ev.char_index = index;
  ev.T = T;
  ev.log_term = std::log(static_cast<double>(ev.q) / kPi);
  ev.arch_term = i_arch(f, T, static_cast<double>(c.parity));
  const WeightTwist twist = WeightTwist::custom(
      WeightTwist::Kind::Character,
      [&table, index](std::uint64_t n) { return table.chi_re(index, n); });
  ev.prime_term = 2.0 * weighted_sum(f, T, twist, primes);
  ev.rhs = ev.log_term - ev.arch_term - ev.prime_term;
  return ev;
}

double zero_side(const ZeroList& zeros, const TestFunction& f, double T) {
  std::vector<double> terms;
  terms.reserve(zeros.ordinates.size() + 1);
  for (double g : zeros.ordinates) terms.push_back(2.0 * T * fourier(f, T * g));
  if (zeros.n_central > 0)
    terms.push_back(zeros.n_central * T * fourier(f, 0.0));
  return pairwise_sum(terms);
}

double two_sided_zero_sum(const ZeroList& chi_list, const ZeroList& conj_list,
                          const TestFunction& f, double T) {
  std::vector<double> terms;
  terms.reserve(chi_list.ordinates.size() + conj_list.ordinates.size() + 1);
  for (double g : chi_list.ordinates) terms.push_back(T * fourier(f, T * g));
  for (double g : conj_list.ordinates) terms.push_back(T * fourier(f, T * g));
  if (chi_list.n_central > 0)
    terms.push_back(chi_list.n_central * T * fourier(f, 0.0));
  return pairwise_sum(terms);
}

namespace {

struct Envelope {
  std::function<double(double)> env;   // |F^(u)| <= env(u), decreasing
  std::function<double(double)> denv;  // env'
  double u_req;                        // validity threshold in u = T t
};

Envelope transform_envelope(const TestFunction& f) {
  const double pi2 = kPi * kPi;
  switch (f.family) {
    case Family::Triangle:
      return {[](double u) { return 4.0 / (u * u); },
              [](double u) { return -8.0 / (u * u * u); }, 1e-6};
    case Family::Kernel:
      return {[pi2](double u) {
                const double d = u * u - pi2;
                return 8.0 * pi2 / (d * d);
              },
              [pi2](double u) {
                const double d = u * u - pi2;
                return -32.0 * pi2 * u / (d * d * d);
              },
              2.0 * kPi};
    case Family::FAlpha: {
      const double a = f.param;
      return {[a, pi2](double u) {
                const double d = u * u - pi2;
                return (4.0 * pi2 * (a + 1.0) + 4.0 * (a - 1.0) * u * u) / (d * d);
              },
              [a, pi2](double u) {
                const double d = u * u - pi2;
                return -8.0 * u * ((a - 1.0) * u * u + pi2 * (3.0 * a + 1.0)) /
                       (d * d * d);
              },
              std::max(2.0 * kPi, sign_threshold(f))};
    }
    case Family::GAlpha: {
      const double a = f.param;
      const double s = pi2 / (2.0 * (a + 2.0));
      Envelope fa = transform_envelope(TestFunction::falpha(a));
      return {[s, fa](double u) { return s * fa.env(u) * 4.0 / (u * u); },
              [s, fa](double u) {
                return s * (fa.denv(u) * 4.0 / (u * u) -
                            fa.env(u) * 8.0 / (u * u * u));
              },
              fa.u_req};
    }
    case Family::LTheta: {
      const double th = f.param;
      const double den = 1.0 + sinc(th);
      return {[th, den](double u) {
                const double d = u - th;
                return 8.0 / (den * d * d);
              },
              [th, den](double u) {
                const double d = u - th;
                return -16.0 / (den * d * d * d);
              },
              th + 2.0};
    }
    case Family::JBeta: {
      const double b = f.param;
      return {[b](double u) {
                const double d = u - b;
                return 3.0 / (kPi * kPi * d * d);
              },
              [b](double u) {
                const double d = u - b;
                return -6.0 / (kPi * kPi * d * d * d);
              },
              b + 1.0};
    }
    case Family::GBetaMinorant:
      throw domain_error("zero_tail_bound: gbeta transform has no quadratic envelope");
  }
  throw domain_error("zero_tail_bound: unsupported family");
}

}  // namespace

double zero_tail_bound(double q, const TestFunction& f, double T,
                       double height) {
  validate(f);
  if (!(height >= 1.0)) throw domain_error("zero_tail_bound requires height >= 1");
  if (f.family == Family::GBetaMinorant) {
    if (T * height >= 2.0 * kPi) return 0.0;
    throw domain_error("zero_tail_bound: gbeta needs T*height >= 2 pi");
  }
  if (!zero_count_band_valid(q, height))
    throw domain_error("zero_tail_bound: counting band invalid at this height");
  const Envelope e = transform_envelope(f);
  if (!(T * height > e.u_req))
    throw domain_error("zero_tail_bound: envelope not yet valid at T*height");

  auto phi = [&](double t) { return T * e.env(T * t); };
  auto neg_dphi = [&](double t) { return -T * T * e.denv(T * t); };
  // Worst-parity counting bounds.
  auto n_up = [&](double t) {
    return zero_count_main(q, t, -1.0) + zero_count_band(q, t);
  };
  const double n_low = zero_count_main(q, height, 1.0) - zero_count_band(q, height);

  const double X = std::max(1000.0, 100.0 * height);
  const double integral =
      integrate([&](double t) { return n_up(t) * neg_dphi(t); }, height, X, 1e-10);
  // Beyond X: N_up(t) <= t log(qt) and phi(t) t^2 is decreasing, so
  //   int_X^inf N_up (-phi') <= phi(X) X log(qX) + phi(X) X^2 (log(qX)+2)/X.
  const double lq = std::log(q * X);
  const double remainder = phi(X) * X * lq + phi(X) * X * (lq + 2.0);
  return std::max(0.0, -phi(height) * n_low + integral + remainder);
}

double MestreData::analytic_conductor() const {
  double c = conductor;
  for (const auto& m : mu) c *= std::abs(m) + 3.0;
  return c;
}

namespace {
void validate_mestre(const MestreData& d) {
  if (!(d.conductor > 0.0)) throw domain_error("mestre: conductor must be > 0");
  if (d.degree < 1 || static_cast<std::size_t>(d.degree) != d.mu.size())
    throw domain_error("mestre: mu list must have length m >= 1");
  for (const auto& m : d.mu)
    if (!(m.real() > -1.0)) throw domain_error("mestre: Re(mu_j) must be > -1");
  if (d.r_pole < 0 || d.r_pole > d.degree)
    throw domain_error("mestre: r_pole must lie in [0, m]");
  if (!(d.theta >= 0.0 && d.theta <= 1.0))
    throw domain_error("mestre: theta must lie in [0, 1]");
}
}  // namespace

double mestre_rhs(const MestreData& data, const TestFunction& f, double T,
                  const PrimeTable& primes) {
  validate_mestre(data);
  validate(f);
  const double c = support_halfwidth(f);
  if (!std::isfinite(c))
    throw domain_error("mestre_rhs requires a compactly supported family");
  const double cap = std::exp(c * T);
  if (cap > static_cast<double>(primes.limit) + 0.5)
    throw capacity_error("mestre_rhs: e^{cT} exceeds table limit");

  double total = std::log(data.conductor) - data.degree * std::log(kPi);
  if (data.r_pole > 0)
    total += data.r_pole * (phi_line(f, 0.0, T) + phi_line(f, 1.0, T));
  for (const auto& m : data.mu) total -= i_arch(f, T, m.real());

  std::vector<double> terms;
  for (std::uint64_t p : primes.primes) {
    const double pd = static_cast<double>(p);
    if (pd > cap) break;
    const double lp = std::log(pd);
    double pk = pd;
    int k = 1;
    while (pk <= cap) {
      const double val = eval(f, k * lp / T);
      if (val != 0.0) {
        double coeff_sum = 0.0;
        for (int j = 1; j <= data.degree; ++j) {
          if (!data.coeff) throw domain_error("mestre: missing coefficient source");
          coeff_sum += data.coeff(p, j, k);
        }
        terms.push_back(coeff_sum * val * lp / std::sqrt(pk));
      }
      ++k;
      pk *= pd;
    }
  }
  total -= 2.0 * pairwise_sum(terms);

  for (const auto& m : data.mu) {
    const double re = m.real();
    if (re >= -0.5 + 1e-12) continue;
    const double corr = phi_line(f, -re, T) + phi_line(f, 1.0 + re, T);
    total -= (std::fabs(re + 0.5) <= 1e-12) ? 0.5 * corr : corr;
  }
  return total;
}

MestreData mestre_dirichlet(const CharacterTable& table, std::size_t index) {
  const Character& c = table.character(index);
  if (!c.primitive)
    throw domain_error("mestre_dirichlet requires a primitive character");
  MestreData d;
  d.conductor = static_cast<double>(table.modulus());
  d.degree = 1;
  d.mu = {std::complex<double>(static_cast<double>(c.parity), 0.0)};
  d.r_pole = 0;
  d.theta = 0.0;
  d.coeff = [&table, index](std::uint64_t p, int, int k) {
    // Re(chi(p)^k) = Re(chi(p^k)); evaluate through the phase to avoid
    // forming p^k.
    const auto ph = table.chi_phase(index, p % table.modulus());
    if (!ph) return 0.0;
    const double L = static_cast<double>(table.group_exponent());
    return std::cos(2.0 * kPi * static_cast<double>(*ph) * k / L);
  };
  return d;
}

double mestre_gamma1_leading(const MestreData& data) {
  validate_mestre(data);
  const double C = data.analytic_conductor();
  const double arg = 3.0 / data.degree * std::log(C);
  if (!(arg > 1.0))
    throw domain_error("mestre_gamma1_leading: analytic conductor too small");
  return (0.5 + data.theta) * kPi / std::log(arg);
}

}  // namespace lowzero
