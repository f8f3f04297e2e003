#ifndef LOWZERO_ZEROFINDER_HPP
#define LOWZERO_ZEROFINDER_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lowzero/characters.hpp"

namespace lowzero {

struct ZeroList {
  std::uint64_t q = 0;
  std::size_t char_index = 0;
  double height = 0.0;
  std::vector<double> ordinates;  // positive ordinates, ascending
  std::vector<double> residuals;  // |Z(gamma)| after refinement
  int n_central = 0;              // asserted central multiplicity (kept 0)
  bool possible_central_zero = false;  // |L(1/2)| < 1e-8
  bool complete = false;          // two-sided count sits in the explicit band
  bool band_checked = false;      // the count bound preconditions held
};

// Shared Euler-Maclaurin machinery for one modulus: Hurwitz zeta values
// zeta(1/2 + it, a/q) for every residue a coprime to q.
class ModulusBank {
 public:
  explicit ModulusBank(std::uint64_t q);
  std::uint64_t modulus() const { return q_; }
  const std::vector<std::uint32_t>& residues() const { return res_; }
  // out[i] = zeta(1/2 + it, res[i]/q); throws precision_error when the
  // monitored correction term stays above the target.
  void hurwitz_row(double t, std::vector<std::complex<double>>& out) const;

 private:
  void ensure(std::size_t n) const;
  std::uint64_t q_;
  std::vector<std::uint32_t> res_;
  mutable std::vector<double> logs_;    // [a_idx * cap + k]
  mutable std::vector<double> rsqrt_;
  mutable std::size_t cap_ = 0;
};

class HardyEvaluator {
 public:
  HardyEvaluator(const CharacterTable& table, std::size_t index);
  HardyEvaluator(const CharacterTable& table, std::size_t index,
                 std::shared_ptr<const ModulusBank> bank);

  std::uint64_t modulus() const;
  std::size_t index() const { return idx_; }
  std::complex<double> root_number() const { return eps_; }

  // L(1/2 + it, chi) via q^{-s} sum_a chi(a) zeta(s, a/q).
  std::complex<double> l_value(double t) const;
  // Rotated completed value: real on the critical line, zero at zeros.
  double z(double t) const;
  double z_imag_residual(double t) const;

  // Row-sharing entry points used by the modulus-wide scanner.
  std::complex<double> l_from_row(double t,
                                  const std::vector<std::complex<double>>& row) const;
  double z_from_l(double t, std::complex<double> l) const;

 private:
  const CharacterTable* table_;
  std::size_t idx_;
  int parity_;
  std::shared_ptr<const ModulusBank> bank_;
  std::vector<std::complex<double>> chi_on_residues_;
  std::complex<double> eps_;
  std::complex<double> rot_;
};

// L(1/2 + it, chi); chi must be primitive and non-principal, q <= 500,
// |t| <= 200.
std::complex<double> l_on_critical_line(const CharacterTable& table,
                                        std::size_t index, double t);

double hardy_z(const HardyEvaluator& ev, double t);

// Scan [0, height] for zeros of every requested character, sharing the
// per-modulus Hurwitz rows.  Completeness is checked two-sided through
// the conjugate partner (computed on demand when missing).  threads > 1
// splits the grid across workers with private banks; the merge order is
// fixed, so results do not depend on the worker count.
std::vector<ZeroList> scan_characters(const CharacterTable& table,
                                      const std::vector<std::size_t>& indices,
                                      double height, int threads = 1);

ZeroList find_zeros(const CharacterTable& table, std::size_t index,
                    double height);

struct GammaStats {
  double gamma1 = 0.0;          // |gamma_chi|
  double gamma1_nonreal = 0.0;  // |tilde gamma_chi|
  int n_central = 0;
  bool possible_central_zero = false;
  bool complete = false;
};

GammaStats gamma_stats(const CharacterTable& table, std::size_t index,
                       double height = 60.0);

// CSV export: q,char_index,gamma,refined_residual (one row per zero).
std::string zero_list_csv(const std::vector<ZeroList>& lists);

}  // namespace lowzero

#endif
