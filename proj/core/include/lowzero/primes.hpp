#ifndef LOWZERO_PRIMES_HPP
#define LOWZERO_PRIMES_HPP

#include <cstdint>
#include <ctime>
#include <functional>
#include <string>
#include <vector>

#include "lowzero/testfuncs.hpp"

namespace lowzero {

struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;  // every prime <= limit, ascending
  std::time_t built_at = 0;
};

// Segmented sieve of Eratosthenes.  2 <= limit <= 1e10.
PrimeTable build_table(std::uint64_t limit);

// Binary cache: magic "EFZ1", 64-bit LE limit, then 32-bit LE prime gaps
// (first entry is the gap from 0, i.e. the prime 2).
void save_table(const PrimeTable& table, const std::string& path);
// Returns an empty optional-like table (limit 0) unless the cached limit
// matches the request exactly.
PrimeTable load_table(const std::string& path, std::uint64_t limit);

// Chebyshev psi(x) = sum of log p over prime powers p^k <= x.
double chebyshev_psi(double x, const PrimeTable& table);

struct WeightTwist {
  enum class Kind { None, Character, Kronecker } kind = Kind::None;
  // Character twist: Re(chi(n)); Kronecker twist: (d|n).
  std::function<double(std::uint64_t)> weight;

  static WeightTwist none() { return {}; }
  static WeightTwist custom(Kind k, std::function<double(std::uint64_t)> w) {
    return {k, std::move(w)};
  }
};

// sum over prime powers n = p^k <= e^{cT} of
//   w(n) * F(log n / T) * Lambda(n) / sqrt(n),
// where c is the support half-width of f.  Terms are accumulated with
// pairwise summation.
double weighted_sum(const TestFunction& f, double T, const WeightTwist& twist,
                    const PrimeTable& table);

// #\{p <= x : p = a mod q\}; a = 0 counts the primes dividing q.
std::uint64_t pi_progression(double x, std::uint64_t q, std::uint64_t a,
                             const PrimeTable& table);

}  // namespace lowzero

#endif
