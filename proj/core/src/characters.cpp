#include "lowzero/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lowzero/errors.hpp"
#include "lowzero/specfun.hpp"
#include "lowzero/summation.hpp"

namespace lowzero {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t primitive_root_mod_pk(std::uint64_t p, int e) {
  std::uint64_t pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  const auto pm1_factors = factorize(p - 1);
  std::uint64_t g = 2;
  for (;; ++g) {
    bool ok = true;
    for (auto [r, unused] : pm1_factors) {
      (void)unused;
      if (pow_mod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }
  if (e == 1) return g;
  if (pow_mod(g, p - 1, p * p) == 1) g += p;  // lift to a generator mod p^e
  return g % pe;
}

}  // namespace

std::optional<std::uint64_t> CharacterTable::chi_phase_impl(
    const Character& c, std::uint64_t n) const {
  n %= q_;
  if (std::gcd(n, q_) != 1) return std::nullopt;
  std::uint64_t num = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    const std::uint32_t t = f.dlog[n % f.modulus];
    const std::uint64_t at = static_cast<std::uint64_t>(c.exponents[i]) * t % f.order;
    num = (num + at * (lambda_ / f.order)) % lambda_;
  }
  return num;
}

CharacterTable::CharacterTable(std::uint64_t q) : q_(q) {
  if (q <= 1) throw domain_error("build_characters requires q > 1");
  if (q > 1'000'000) throw capacity_error("build_characters: q exceeds 1e6");

  const auto qf = factorize(q);
  phi_ = 1;
  for (auto [p, e] : qf) {
    std::uint64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    phi_ *= pe / p * (p - 1);
  }

  for (auto [p, e] : qf) {
    std::uint64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e == 1) continue;  // (Z/2)^* is trivial
      if (e == 2) {
        CrtFactor f;
        f.modulus = 4;
        f.order = 2;
        f.prime = 2;
        f.exponent = 2;
        f.two_sign_part = true;
        f.dlog.assign(4, kNoLog);
        f.dlog[1] = 0;
        f.dlog[3] = 1;
        factors_.push_back(std::move(f));
        continue;
      }
      // 8 | q: (Z/2^e)^* = <-1> x <5>.
      CrtFactor fs, ff;
      fs.modulus = ff.modulus = pe;
      fs.prime = ff.prime = 2;
      fs.exponent = ff.exponent = e;
      fs.two_sign_part = true;
      fs.order = 2;
      ff.order = pe / 4;
      fs.dlog.assign(pe, kNoLog);
      ff.dlog.assign(pe, kNoLog);
      std::uint64_t r = 1;
      for (std::uint64_t t = 0; t < ff.order; ++t) {
        fs.dlog[r] = 0;
        ff.dlog[r] = static_cast<std::uint32_t>(t);
        fs.dlog[pe - r] = 1;
        ff.dlog[pe - r] = static_cast<std::uint32_t>(t);
        r = r * 5 % pe;
      }
      factors_.push_back(std::move(fs));
      factors_.push_back(std::move(ff));
      continue;
    }
    CrtFactor f;
    f.modulus = pe;
    f.order = pe / p * (p - 1);
    f.prime = p;
    f.exponent = e;
    f.dlog.assign(pe, kNoLog);
    const std::uint64_t g = primitive_root_mod_pk(p, e);
    std::uint64_t r = 1;
    for (std::uint64_t t = 0; t < f.order; ++t) {
      f.dlog[r] = static_cast<std::uint32_t>(t);
      r = r * g % pe;
    }
    factors_.push_back(std::move(f));
  }

  lambda_ = 1;
  for (const auto& f : factors_) lambda_ = std::lcm(lambda_, f.order);
  roots_.resize(lambda_);
  for (std::uint64_t k = 0; k < lambda_; ++k) {
    const double ang = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(lambda_);
    roots_[k] = {std::cos(ang), std::sin(ang)};
  }

  // Exponent vectors in little-endian mixed radix; principal character first.
  const std::size_t nf = factors_.size();
  std::vector<std::uint32_t> exps(nf, 0);
  chars_.reserve(phi_);
  for (;;) {
    Character c;
    c.exponents = exps;
    chars_.push_back(std::move(c));
    std::size_t i = 0;
    while (i < nf && ++exps[i] == factors_[i].order) {
      exps[i] = 0;
      ++i;
    }
    if (i == nf) break;
  }
  if (chars_.size() != phi_)
    throw capacity_error("character enumeration does not match phi(q)");

  for (auto& c : chars_) {
    c.principal = std::all_of(c.exponents.begin(), c.exponents.end(),
                              [](std::uint32_t a) { return a == 0; });
    c.order = 1;
    c.conductor = 1;
    bool two_sign = false, two_five = false;
    int j2 = 0, e2 = 0;
    for (std::size_t i = 0; i < nf; ++i) {
      const auto& f = factors_[i];
      const std::uint64_t a = c.exponents[i];
      const std::uint64_t o = f.order / std::gcd<std::uint64_t>(f.order, a == 0 ? f.order : a);
      c.order = std::lcm(c.order, o);
      if (f.prime == 2 && f.exponent >= 3) {
        e2 = f.exponent;
        if (f.two_sign_part) {
          two_sign = (a != 0);
        } else if (a != 0) {
          two_five = true;
          std::uint64_t oo = o;
          j2 = 0;
          while (oo > 1) {
            oo >>= 1;
            ++j2;
          }
        }
        continue;
      }
      if (f.prime == 2) {  // modulus 4
        if (a != 0) c.conductor *= 4;
        continue;
      }
      if (o == 1) continue;
      std::uint64_t local = f.prime;
      std::uint64_t oo = o;
      while (oo % f.prime == 0) {
        local *= f.prime;
        oo /= f.prime;
      }
      c.conductor *= local;
    }
    if (e2 >= 3) {
      if (two_five)
        c.conductor *= std::uint64_t(1) << (j2 + 2);
      else if (two_sign)
        c.conductor *= 4;
    }
    const auto ph = chi_phase_impl(c, q_ - 1);
    c.parity = (!ph || *ph == 0) ? 0 : 1;
    c.primitive = (c.conductor == q_) && !c.principal;
  }
}

std::optional<std::uint64_t> CharacterTable::chi_phase(std::size_t idx,
                                                       std::uint64_t n) const {
  return chi_phase_impl(chars_.at(idx), n);
}

std::complex<double> CharacterTable::chi(std::size_t idx, std::uint64_t n) const {
  const auto ph = chi_phase(idx, n);
  if (!ph) return {0.0, 0.0};
  return roots_[*ph];
}

double CharacterTable::chi_re(std::size_t idx, std::uint64_t n) const {
  const auto ph = chi_phase(idx, n);
  if (!ph) return 0.0;
  return roots_[*ph].real();
}

std::size_t CharacterTable::conjugate_index(std::size_t idx) const {
  const Character& c = chars_.at(idx);
  std::size_t out = 0, stride = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::uint32_t a = c.exponents[i];
    const std::uint32_t conj =
        a == 0 ? 0 : static_cast<std::uint32_t>(factors_[i].order - a);
    out += conj * stride;
    stride *= factors_[i].order;
  }
  return out;
}

std::vector<std::size_t> CharacterTable::primitive_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < chars_.size(); ++i)
    if (chars_[i].primitive) out.push_back(i);
  return out;
}

std::uint64_t CharacterTable::conductor_by_kernel(std::size_t idx) const {
  const Character& c = chars_.at(idx);
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= q_; ++d)
    if (q_ % d == 0) {
      divisors.push_back(d);
      if (d != q_ / d) divisors.push_back(q_ / d);
    }
  std::sort(divisors.begin(), divisors.end());
  for (std::uint64_t d : divisors) {
    bool trivial = true;
    for (std::uint64_t n = 1; n <= q_ && trivial; n += d) {
      if (std::gcd(n, q_) != 1) continue;
      const auto ph = chi_phase_impl(c, n);
      if (ph && *ph != 0) trivial = false;
    }
    if (trivial) return d;
  }
  return q_;
}

bool CharacterTable::orthogonality_check() const {
  for (std::uint64_t n = 1; n <= q_; ++n) {
    long long expect;
    if (std::gcd(n, q_) != 1)
      expect = 0;
    else if (n % q_ == 1 % q_)
      expect = static_cast<long long>(phi_) - 1;
    else
      expect = -1;
    long long got;
    if (std::gcd(n, q_) != 1) {
      got = 0;
    } else {
      // Exact: the full character sum is phi(q) iff every factor dlog is 0.
      bool all_zero = true;
      for (const auto& f : factors_)
        if (f.dlog[n % f.modulus] != 0) {
          all_zero = false;
          break;
        }
      got = all_zero ? static_cast<long long>(phi_) - 1 : -1;
    }
    if (got != expect) return false;
    if (n <= 5 || n + 1 == q_) {  // numerical spot check
      std::complex<double> s{0.0, 0.0};
      for (std::size_t k = 0; k < chars_.size(); ++k)
        if (!chars_[k].principal) s += chi(k, n);
      if (std::abs(s - std::complex<double>(static_cast<double>(expect), 0.0)) >
          1e-9 * static_cast<double>(phi_ + 1))
        return false;
    }
  }
  return true;
}

CharacterTable build_characters(std::uint64_t q) { return CharacterTable(q); }

std::pair<double, double> conductor_average(std::uint64_t q) {
  if (q <= 2) throw domain_error("conductor_average requires q > 2");
  CharacterTable table(q);
  std::vector<double> terms;
  terms.reserve(table.size());
  for (const auto& c : table.characters())
    terms.push_back(std::log(static_cast<double>(c.conductor)));
  const double lhs = pairwise_sum(terms) / static_cast<double>(table.phi());
  double rhs = std::log(static_cast<double>(q));
  for (auto [p, e] : factorize(q)) {
    (void)e;
    rhs -= std::log(static_cast<double>(p)) / static_cast<double>(p - 1);
  }
  return {lhs, rhs};
}

int kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  int result = 1;
  int twos = 0;
  while ((n & 1) == 0) {
    n /= 2;
    ++twos;
  }
  if (twos & 1) {
    const long long r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while ((a & 1) == 0) {
      a /= 2;
      const long long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a % 4 == 3) && (n % 4 == 3)) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool is_fundamental_discriminant(long long d) {
  if (d == 0 || d == 1) return false;
  auto squarefree = [](long long m) {
    m = std::llabs(m);
    for (long long p = 2; p * p <= m; ++p)
      if (m % (p * p) == 0) return false;
    return true;
  };
  const long long r4 = ((d % 4) + 4) % 4;
  if (r4 == 1) return squarefree(d);
  if (r4 == 0) {
    const long long m = d / 4;
    const long long mr = ((m % 4) + 4) % 4;
    return (mr == 2 || mr == 3) && squarefree(m);
  }
  return false;
}

std::vector<long long> fundamental_discriminants(long long D) {
  if (D < 3) throw domain_error("fundamental_discriminants requires D >= 3");
  std::vector<char> not_sf(static_cast<std::size_t>(D) + 1, 0);
  for (long long p = 2; p * p <= D; ++p)
    for (long long m = p * p; m <= D; m += p * p) not_sf[m] = 1;
  auto squarefree = [&](long long m) { return !not_sf[std::llabs(m)]; };

  std::vector<long long> out;
  for (long long ad = 3; ad <= D; ++ad) {
    for (long long d : {-ad, ad}) {
      const long long r4 = ((d % 4) + 4) % 4;
      bool fund = false;
      if (r4 == 1)
        fund = squarefree(d);
      else if (r4 == 0) {
        const long long m = d / 4;
        const long long mr = ((m % 4) + 4) % 4;
        fund = (mr == 2 || mr == 3) && squarefree(m);
      }
      if (fund) out.push_back(d);
    }
  }
  return out;
}

double jutila_ratio(std::uint64_t N, std::uint64_t D) {
  if (N < 1 || D < 3) throw domain_error("jutila_ratio requires N >= 1, D >= 3");
  if (N * D > 1'000'000'000ull)
    throw capacity_error("jutila_ratio: N*D exceeds the 1e9 operation cap");
  if (N == 1) return 0.0;
  const auto fund = fundamental_discriminants(static_cast<long long>(D));
  std::vector<double> terms;
  for (std::uint64_t n = 2; n <= N; ++n) {
    const auto root = static_cast<std::uint64_t>(
        std::llround(std::sqrt(static_cast<double>(n))));
    if (root * root == n) continue;
    long long s = 0;
    for (long long d : fund) s += kronecker(d, static_cast<long long>(n));
    terms.push_back(static_cast<double>(s) * static_cast<double>(s));
  }
  const double lhs = pairwise_sum(terms);
  const double logN = std::log(static_cast<double>(N));
  return lhs / (static_cast<double>(N) * static_cast<double>(D) *
                std::pow(logN, 10));
}

}  // namespace lowzero
