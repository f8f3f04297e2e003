#ifndef LOWZERO_CHARACTERS_HPP
#define LOWZERO_CHARACTERS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lowzero {

// One cyclic factor of (Z/q)^* under the CRT decomposition.  The 2-power
// part contributes two factors <-1> x <5> once 8 | q.
struct CrtFactor {
  std::uint64_t modulus = 1;    // p^e this factor lives in
  std::uint64_t order = 1;      // size of the cyclic factor
  std::uint64_t prime = 0;      // underlying prime
  int exponent = 0;             // e
  bool two_sign_part = false;   // the <-1> factor of the 2-part
  std::vector<std::uint32_t> dlog;  // residue -> exponent; kNoLog if not coprime
};

inline constexpr std::uint32_t kNoLog = 0xffffffffu;

struct Character {
  std::vector<std::uint32_t> exponents;  // one per CRT factor
  std::uint64_t conductor = 1;
  std::uint64_t order = 1;
  int parity = 0;  // delta_chi = (1 - chi(-1)) / 2
  bool primitive = false;
  bool principal = false;
};

class CharacterTable {
 public:
  explicit CharacterTable(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }
  std::uint64_t phi() const { return phi_; }
  std::uint64_t group_exponent() const { return lambda_; }
  const std::vector<Character>& characters() const { return chars_; }
  const Character& character(std::size_t idx) const { return chars_.at(idx); }
  std::size_t size() const { return chars_.size(); }
  std::size_t principal_index() const { return 0; }

  // chi(n); 0 when gcd(n, q) > 1.
  std::complex<double> chi(std::size_t idx, std::uint64_t n) const;
  double chi_re(std::size_t idx, std::uint64_t n) const;

  // Exact phase: chi(n) = e^{2 pi i k / L} with L = group_exponent().
  // nullopt when gcd(n, q) > 1.
  std::optional<std::uint64_t> chi_phase(std::size_t idx, std::uint64_t n) const;

  // Index of the conjugate character.
  std::size_t conjugate_index(std::size_t idx) const;

  std::vector<std::size_t> primitive_indices() const;

  // Conductor recomputed as the smallest induced modulus by scanning the
  // kernel \{n = 1 mod d\}; reference route for tests.
  std::uint64_t conductor_by_kernel(std::size_t idx) const;

  // Exact orthogonality: verifies sum over chi != chi0 of chi(n) equals
  // phi(q)-1 / 0 / -1 for every n in [1, q].  Returns false on violation.
  bool orthogonality_check() const;

 private:
  std::optional<std::uint64_t> chi_phase_impl(const Character& c,
                                              std::uint64_t n) const;

  std::uint64_t q_ = 0;
  std::uint64_t phi_ = 0;
  std::uint64_t lambda_ = 1;  // lcm of factor orders
  std::vector<CrtFactor> factors_;
  std::vector<Character> chars_;
  std::vector<std::complex<double>> roots_;  // e^{2 pi i k / lambda}
};

CharacterTable build_characters(std::uint64_t q);

// (lhs, rhs) of the conductor identity
//   (1/phi(q)) sum_chi log con(chi) = log q - sum_{p|q} log p / (p-1).
std::pair<double, double> conductor_average(std::uint64_t q);

// Kronecker symbol (d|n), full extension to all integers.
int kronecker(long long d, long long n);

bool is_fundamental_discriminant(long long d);

// All fundamental discriminants with |d| <= D, sorted by (|d|, d).
std::vector<long long> fundamental_discriminants(long long D);

// Mean-square character sum monitor:
//   sum_{n<=N, n non-square} | sum_{|d|<=D fundamental} (d|n) |^2
// divided by N * D * (log N)^10.
double jutila_ratio(std::uint64_t N, std::uint64_t D);

}  // namespace lowzero

#endif
