#include <cmath>
#include <cstdio>
#include <numeric>

#include "doctest.h"
#include "lowzero/characters.hpp"
#include "lowzero/errors.hpp"
#include "lowzero/primes.hpp"
#include "lowzero/specfun.hpp"

using namespace lowzero;

namespace {
const PrimeTable& table_1e6() {
  static const PrimeTable t = build_table(1'000'000);
  return t;
}
}  // namespace

TEST_CASE("sieve counts") {
  CHECK(build_table(100).primes.size() == 25);
  CHECK(table_1e6().primes.size() == 78498);
  CHECK_THROWS_AS(build_table(1), capacity_error);
}

TEST_CASE("chebyshev psi") {
  const PrimeTable t = build_table(64);
  // Direct enumeration over {2,3,4,5,7,8,9}.
  const double expect = 3.0 * std::log(2.0) + 2.0 * std::log(3.0) +
                        std::log(5.0) + std::log(7.0);
  CHECK(chebyshev_psi(10.0, t) == doctest::Approx(expect).epsilon(1e-14));
  const double p6 = chebyshev_psi(1e6, table_1e6());
  CHECK(p6 < 1.039e6);
  CHECK(std::fabs(p6 - 1e6) < 1e6 / std::log(1e6));
  CHECK_THROWS_AS(chebyshev_psi(1e7, table_1e6()), capacity_error);
}

TEST_CASE("weighted sum agrees with a hand enumeration") {
  const PrimeTable t = build_table(100);
  const double T = std::log(4.0);
  const double got = weighted_sum(TestFunction::triangle(), T, WeightTwist::none(), t);
  const double expect =
      std::log(2.0) / std::sqrt(2.0) * (1.0 - std::log(2.0) / T) +
      std::log(3.0) / std::sqrt(3.0) * (1.0 - std::log(3.0) / T);
  CHECK(got == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("prime-power sum sits under the asymptotic envelope") {
  const double T = 6.3;
  const PrimeTable t = build_table(static_cast<std::uint64_t>(std::exp(T)) + 2);
  const double s = weighted_sum(TestFunction::falpha(3.0), T, WeightTwist::none(), t);
  const double envelope = (4.0 + 8.0 / T) * 2.0 * std::exp(T / 2.0) / T;
  CHECK(s <= envelope);
  CHECK(s > 0.0);
}

TEST_CASE("twisted sums respect the triangle inequality") {
  const PrimeTable t = build_table(200);
  const CharacterTable c5 = build_characters(5);
  const std::size_t idx = c5.primitive_indices().front();
  const WeightTwist twist = WeightTwist::custom(
      WeightTwist::Kind::Character,
      [&](std::uint64_t n) { return c5.chi_re(idx, n); });
  const double tw = weighted_sum(TestFunction::kernel(), 5.0, twist, t);
  const double plain = weighted_sum(TestFunction::kernel(), 5.0, WeightTwist::none(), t);
  CHECK(std::fabs(tw) <= plain + 1e-14);
}

TEST_CASE("untwisted sums grow with T for nonnegative families") {
  const PrimeTable t = build_table(4000);
  for (const auto& f : {TestFunction::triangle(), TestFunction::kernel(),
                        TestFunction::ltheta(1.3)}) {
    double prev = 0.0;
    for (double T = 1.0; T <= 8.0; T += 0.5) {
      const double cur = weighted_sum(f, T, WeightTwist::none(), t);
      CHECK(cur >= prev - 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("progression counts") {
  const PrimeTable t = build_table(1000);
  CHECK(pi_progression(100.0, 4, 1, t) == 11);
  CHECK(pi_progression(100.0, 4, 3, t) == 13);
  CHECK(pi_progression(10.0, 1, 0, t) == 4);
  CHECK(pi_progression(100.0, 10, 5, t) == 1);  // p = 5 only
}

TEST_CASE("Brun-Titchmarsh finite check") {
  const PrimeTable& t = table_1e6();
  for (std::uint64_t q : {3ull, 5ull, 8ull, 12ull}) {
    double phi = 0;
    for (std::uint64_t a = 1; a < q; ++a)
      if (std::gcd(a, q) == 1) phi += 1;
    for (std::uint64_t a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      for (double x : {double(2 * q + 1), 1e3, 1e4, 1e5, 1e6}) {
        const double bound = 2.0 * x / (phi * std::log(x / q));
        CHECK(static_cast<double>(pi_progression(x, q, a, t)) <= bound);
      }
    }
  }
}

TEST_CASE("averaged twisted sums at desk scale") {
  // |sum over nonprincipal chi of the twisted sum| against the
  // alpha e^{T/2}/T + alpha sqrt(q) log q shape, one fitted constant.
  const PrimeTable& t = table_1e6();
  const double alpha = 10.0;
  double fitted = 0.0;
  for (std::uint64_t q : {101ull, 211ull}) {
    const CharacterTable tab = build_characters(q);
    for (double T : {6.0, 9.0, 12.0}) {
      double total = 0.0;
      for (std::size_t i = 0; i < tab.size(); ++i) {
        if (tab.character(i).principal) continue;
        const WeightTwist twist = WeightTwist::custom(
            WeightTwist::Kind::Character,
            [&](std::uint64_t n) { return tab.chi_re(i, n); });
        total += weighted_sum(TestFunction::falpha(alpha), T, twist, t);
      }
      const double shape = alpha * std::exp(T / 2.0) / T +
                           alpha * std::sqrt(double(q)) * std::log(double(q));
      fitted = std::max(fitted, std::fabs(total) / shape);
    }
  }
  CHECK(fitted <= 10.0);
}

TEST_CASE("binary cache round trip") {
  const PrimeTable t = build_table(10000);
  const std::string path = "prime_cache_test.bin";
  save_table(t, path);
  const PrimeTable re = load_table(path, 10000);
  CHECK(re.limit == t.limit);
  CHECK(re.primes == t.primes);
  // A limit mismatch must refuse the cache.
  CHECK(load_table(path, 10001).limit == 0);
  std::remove(path.c_str());
}

TEST_CASE("capacity checks") {
  const PrimeTable t = build_table(100);
  CHECK_THROWS_AS(weighted_sum(TestFunction::triangle(), 10.0, WeightTwist::none(), t),
                  capacity_error);
  CHECK_THROWS_AS(pi_progression(1e4, 4, 1, t), capacity_error);
}
