#include "lowzero/primes.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

#include "lowzero/errors.hpp"
#include "lowzero/summation.hpp"

namespace lowzero {

namespace {
constexpr std::uint64_t kSegment = 1u << 18;
constexpr std::uint64_t kMaxLimit = 10'000'000'000ull;
}  // namespace

PrimeTable build_table(std::uint64_t limit) {
  if (limit < 2) throw capacity_error("build_table: limit must be >= 2");
  if (limit > kMaxLimit) throw capacity_error("build_table: limit exceeds 1e10");

  PrimeTable table;
  table.limit = limit;
  table.built_at = std::time(nullptr);

  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    if (i <= limit) base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }
  for (std::uint64_t p : base)
    if (p <= limit) table.primes.push_back(p);

  std::vector<char> sieve(kSegment);
  for (std::uint64_t low = root + 1; low <= limit; low += kSegment) {
    const std::uint64_t high = std::min(low + kSegment - 1, limit);
    std::fill(sieve.begin(), sieve.begin() + (high - low + 1), 1);
    for (std::uint64_t p : base) {
      if (p * p > high) break;
      std::uint64_t start = ((low + p - 1) / p) * p;
      if (start < p * p) start = p * p;
      for (std::uint64_t j = start; j <= high; j += p) sieve[j - low] = 0;
    }
    for (std::uint64_t i = low; i <= high; ++i)
      if (sieve[i - low]) table.primes.push_back(i);
  }

  if (limit >= 1'000'000) {
    // Build-time invariant: pi(1e6) = 78498.
    const auto it = std::upper_bound(table.primes.begin(), table.primes.end(),
                                     1'000'000ull);
    if (it - table.primes.begin() != 78498)
      throw capacity_error("build_table: pi(1e6) check failed");
  }
  return table;
}

void save_table(const PrimeTable& table, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw capacity_error("save_table: cannot open " + path);
  std::fwrite("EFZ1", 1, 4, fp);
  std::uint64_t lim = table.limit;
  unsigned char buf8[8];
  for (int i = 0; i < 8; ++i) buf8[i] = (lim >> (8 * i)) & 0xff;
  std::fwrite(buf8, 1, 8, fp);
  std::uint64_t prev = 0;
  for (std::uint64_t p : table.primes) {
    const std::uint32_t gap = static_cast<std::uint32_t>(p - prev);
    unsigned char buf4[4];
    for (int i = 0; i < 4; ++i) buf4[i] = (gap >> (8 * i)) & 0xff;
    std::fwrite(buf4, 1, 4, fp);
    prev = p;
  }
  std::fclose(fp);
}

PrimeTable load_table(const std::string& path, std::uint64_t limit) {
  PrimeTable table;
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) return table;
  char magic[4];
  if (std::fread(magic, 1, 4, fp) != 4 || std::memcmp(magic, "EFZ1", 4) != 0) {
    std::fclose(fp);
    return table;
  }
  unsigned char buf8[8];
  if (std::fread(buf8, 1, 8, fp) != 8) {
    std::fclose(fp);
    return table;
  }
  std::uint64_t lim = 0;
  for (int i = 0; i < 8; ++i) lim |= static_cast<std::uint64_t>(buf8[i]) << (8 * i);
  if (lim != limit) {
    std::fclose(fp);
    return table;
  }
  std::uint64_t prev = 0;
  unsigned char buf4[4];
  while (std::fread(buf4, 1, 4, fp) == 4) {
    std::uint32_t gap = 0;
    for (int i = 0; i < 4; ++i) gap |= static_cast<std::uint32_t>(buf4[i]) << (8 * i);
    prev += gap;
    table.primes.push_back(prev);
  }
  std::fclose(fp);
  table.limit = lim;
  table.built_at = std::time(nullptr);
  return table;
}

double chebyshev_psi(double x, const PrimeTable& table) {
  if (x > static_cast<double>(table.limit))
    throw capacity_error("chebyshev_psi: x beyond table limit");
  std::vector<double> terms;
  for (std::uint64_t p : table.primes) {
    if (static_cast<double>(p) > x) break;
    const double lp = std::log(static_cast<double>(p));
    double pk = static_cast<double>(p);
    while (pk <= x) {
      terms.push_back(lp);
      pk *= static_cast<double>(p);
    }
  }
  return pairwise_sum(terms);
}

double weighted_sum(const TestFunction& f, double T, const WeightTwist& twist,
                    const PrimeTable& table) {
  validate(f);
  if (!(T > 0.0)) throw domain_error("weighted_sum requires T > 0");
  const double c = support_halfwidth(f);
  if (!std::isfinite(c))
    throw domain_error("weighted_sum requires compact support");
  const double cap = std::exp(c * T);
  if (cap > static_cast<double>(table.limit) + 0.5)
    throw capacity_error("weighted_sum: e^{cT} exceeds table limit");

  std::vector<double> terms;
  for (std::uint64_t p : table.primes) {
    const double pd = static_cast<double>(p);
    if (pd > cap) break;
    const double lp = std::log(pd);
    double nd = pd;
    std::uint64_t n = p;
    int k = 1;
    while (nd <= cap) {
      double w = 1.0;
      if (twist.weight) w = twist.weight(n);
      if (w != 0.0) {
        const double val = eval(f, k * lp / T);
        if (val != 0.0) terms.push_back(w * val * lp / std::sqrt(nd));
      }
      ++k;
      nd *= pd;
      n = (nd <= cap) ? n * p : n;
    }
  }
  return pairwise_sum(terms);
}

std::uint64_t pi_progression(double x, std::uint64_t q, std::uint64_t a,
                             const PrimeTable& table) {
  if (x > static_cast<double>(table.limit))
    throw capacity_error("pi_progression: x beyond table limit");
  if (q == 0) throw domain_error("pi_progression: q must be positive");
  std::uint64_t count = 0;
  for (std::uint64_t p : table.primes) {
    if (static_cast<double>(p) > x) break;
    if (p % q == a % q) ++count;
  }
  return count;
}

}  // namespace lowzero
