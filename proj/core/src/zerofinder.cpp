#include "lowzero/zerofinder.hpp"
#include <cstdio>
#include <limits>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <memory>
#include <set>
#include <thread>

#include "lowzero/bounds.hpp"
#include "lowzero/errors.hpp"
#include "lowzero/optimize.hpp"
#include "lowzero/specfun.hpp"

namespace lowzero {

namespace {

// B_{2j} / (2j)! for the Euler-Maclaurin correction, j = 1..12.
constexpr int kBernM = 12;
const double kBern[kBernM] = {
    8.3333333333333333e-02,  -1.3888888888888889e-03, 3.3068783068783069e-05,
    -8.2671957671957672e-07, 2.0876756987868099e-08,  -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13, 8.5860620562778446e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812523e-19};

std::size_t em_terms(double t) {
  return std::max<std::size_t>(28, static_cast<std::size_t>((std::fabs(t) + 30.0) / 2.0));
}

}  // namespace

ModulusBank::ModulusBank(std::uint64_t q) : q_(q) {
  if (q < 2) throw domain_error("ModulusBank requires q >= 2");
  for (std::uint64_t a = 1; a <= q; ++a)
    if (std::gcd(a, q) == 1) res_.push_back(static_cast<std::uint32_t>(a));
}

void ModulusBank::ensure(std::size_t n) const {
  if (n <= cap_) return;
  const std::size_t ncap = std::max<std::size_t>({n, 2 * cap_, 64});
  logs_.resize(res_.size() * ncap);
  rsqrt_.resize(res_.size() * ncap);
  for (std::size_t ai = 0; ai < res_.size(); ++ai) {
    const double w0 = static_cast<double>(res_[ai]) / static_cast<double>(q_);
    for (std::size_t k = 0; k < ncap; ++k) {
      const double w = static_cast<double>(k) + w0;
      logs_[ai * ncap + k] = std::log(w);
      rsqrt_[ai * ncap + k] = 1.0 / std::sqrt(w);
    }
  }
  cap_ = ncap;
}

void ModulusBank::hurwitz_row(double t,
                              std::vector<std::complex<double>>& out) const {
  const std::complex<double> s(0.5, t);
  std::size_t N = em_terms(t);
  out.assign(res_.size(), {0.0, 0.0});
  for (int attempt = 0;; ++attempt) {
    ensure(N + 1);
    // Pochhammer products (s)_{2j-1}, shared across residues.
    std::complex<double> poch[kBernM];
    {
      std::complex<double> p = s;  // (s)_1
      poch[0] = p;
      for (int j = 1; j < kBernM; ++j) {
        p *= (s + std::complex<double>(2.0 * j - 1.0, 0.0)) *
             (s + std::complex<double>(2.0 * j, 0.0));
        poch[j] = p;
      }
    }
    double worst_last = 0.0;
    for (std::size_t ai = 0; ai < res_.size(); ++ai) {
      const double* lg = &logs_[ai * cap_];
      const double* rs = &rsqrt_[ai * cap_];
      double re = 0.0, im = 0.0;
      for (std::size_t k = 0; k < N; ++k) {
        const double ang = t * lg[k];
        re += rs[k] * std::cos(ang);
        im -= rs[k] * std::sin(ang);
      }
      const double w0 = static_cast<double>(res_[ai]) / static_cast<double>(q_);
      const double nw = static_cast<double>(N) + w0;
      const std::complex<double> base(rs[N] * std::cos(t * lg[N]),
                                      -rs[N] * std::sin(t * lg[N]));
      std::complex<double> acc(re, im);
      acc += nw * base / (s - 1.0);  // (N+w)^{1-s} / (s-1)
      acc += 0.5 * base;
      const double inv = 1.0 / nw;
      double invp = inv;  // inv^(2j-1)
      std::complex<double> last{0.0, 0.0};
      for (int j = 0; j < kBernM; ++j) {
        last = kBern[j] * poch[j] * base * invp;
        acc += last;
        invp *= inv * inv;
      }
      worst_last = std::max(worst_last, std::abs(last));
      out[ai] = acc;
    }
    if (worst_last < 2e-13) return;
    if (attempt >= 3)
      throw precision_error("hurwitz_row: correction term stalled", worst_last);
    N += N / 2;
  }
}

HardyEvaluator::HardyEvaluator(const CharacterTable& table, std::size_t index)
    : HardyEvaluator(table, index, std::make_shared<ModulusBank>(table.modulus())) {}

HardyEvaluator::HardyEvaluator(const CharacterTable& table, std::size_t index,
                               std::shared_ptr<const ModulusBank> bank)
    : table_(&table), idx_(index), bank_(std::move(bank)) {
  const Character& c = table.character(index);
  if (!c.primitive)
    throw domain_error("HardyEvaluator requires a primitive character");
  if (table.modulus() > 500)
    throw capacity_error("HardyEvaluator supports q <= 500");
  parity_ = c.parity;
  const std::uint64_t q = table.modulus();
  chi_on_residues_.reserve(bank_->residues().size());
  for (std::uint32_t a : bank_->residues())
    chi_on_residues_.push_back(table.chi(idx_, a));
  // Gauss sum and root number.
  std::complex<double> tau{0.0, 0.0};
  for (std::size_t i = 0; i < bank_->residues().size(); ++i) {
    const double ang = 2.0 * kPi * static_cast<double>(bank_->residues()[i]) /
                       static_cast<double>(q);
    tau += chi_on_residues_[i] * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  const std::complex<double> i_delta =
      parity_ == 0 ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, 1.0);
  eps_ = tau / (i_delta * std::sqrt(static_cast<double>(q)));
  rot_ = 1.0 / std::sqrt(eps_);
}

std::uint64_t HardyEvaluator::modulus() const { return table_->modulus(); }

std::complex<double> HardyEvaluator::l_from_row(
    double t, const std::vector<std::complex<double>>& row) const {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < row.size(); ++i)
    sum += chi_on_residues_[i] * row[i];
  const double lq = std::log(static_cast<double>(table_->modulus()));
  // q^{-s} with s = 1/2 + it
  const std::complex<double> qs =
      std::exp(std::complex<double>(-0.5 * lq, -t * lq));
  return qs * sum;
}

std::complex<double> HardyEvaluator::l_value(double t) const {
  std::vector<std::complex<double>> row;
  bank_->hurwitz_row(t, row);
  return l_from_row(t, row);
}

double HardyEvaluator::z_from_l(double t, std::complex<double> l) const {
  const double q = static_cast<double>(table_->modulus());
  const std::complex<double> half_arg(0.25 + 0.5 * parity_, 0.5 * t);
  const double gphase = log_gamma(half_arg).imag();
  const double phase = 0.5 * t * std::log(q / kPi) + gphase;
  const std::complex<double> val =
      rot_ * std::complex<double>(std::cos(phase), std::sin(phase)) * l;
  return val.real();
}

double HardyEvaluator::z(double t) const { return z_from_l(t, l_value(t)); }

double HardyEvaluator::z_imag_residual(double t) const {
  const std::complex<double> l = l_value(t);
  const double q = static_cast<double>(table_->modulus());
  const std::complex<double> half_arg(0.25 + 0.5 * parity_, 0.5 * t);
  const double gphase = log_gamma(half_arg).imag();
  const double phase = 0.5 * t * std::log(q / kPi) + gphase;
  const std::complex<double> val =
      rot_ * std::complex<double>(std::cos(phase), std::sin(phase)) * l;
  return std::fabs(val.imag());
}

std::complex<double> l_on_critical_line(const CharacterTable& table,
                                        std::size_t index, double t) {
  if (std::fabs(t) > 200.0)
    throw capacity_error("l_on_critical_line supports |t| <= 200");
  HardyEvaluator ev(table, index);
  if (t >= 0.0) return ev.l_value(t);
  // L(1/2 + it, chi) = conj(L(1/2 - it, conj chi))
  HardyEvaluator evc(table, table.conjugate_index(index));
  return std::conj(evc.l_value(-t));
}

double hardy_z(const HardyEvaluator& ev, double t) { return ev.z(t); }

namespace {

std::vector<double> scan_one(const HardyEvaluator& ev,
                             const std::vector<double>& grid,
                             const std::vector<double>& zvals,
                             std::vector<double>* residuals) {
  std::vector<double> zeros;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double za = zvals[i], zb = zvals[i + 1];
    if (za == 0.0) {
      if (grid[i] > 1e-9) {
        zeros.push_back(grid[i]);
        if (residuals) residuals->push_back(0.0);
      }
      continue;
    }
    if ((za > 0) == (zb > 0)) continue;
    const double root =
        find_root([&](double t) { return ev.z(t); }, grid[i], grid[i + 1], 1e-11);
    zeros.push_back(root);
    if (residuals) residuals->push_back(std::fabs(ev.z(root)));
  }
  return zeros;
}

}  // namespace

std::vector<ZeroList> scan_characters(const CharacterTable& table,
                                      const std::vector<std::size_t>& indices,
                                      double height, int threads) {
  if (!(height > 0.0) || height > 200.0)
    throw capacity_error("scan_characters supports 0 < height <= 200");
  const std::uint64_t q = table.modulus();
  // Closed working set under conjugation, for two-sided counts.
  std::set<std::size_t> work(indices.begin(), indices.end());
  for (std::size_t i : indices) work.insert(table.conjugate_index(i));

  auto bank = std::make_shared<const ModulusBank>(q);
  std::vector<std::size_t> order(work.begin(), work.end());
  std::vector<HardyEvaluator> evs;
  evs.reserve(order.size());
  for (std::size_t i : order) evs.emplace_back(table, i, bank);

  auto run_scan = [&](double step, std::vector<std::vector<double>>& zvals,
                      std::vector<double>& grid) {
    grid.clear();
    for (double t = 0.0; t < height; t += step) grid.push_back(t);
    grid.push_back(height);
    zvals.assign(evs.size(), std::vector<double>(grid.size()));
    const int nw = std::max(1, std::min<int>(threads, 16));
    auto work_chunk = [&](std::size_t lo, std::size_t hi,
                          const ModulusBank& b) {
      std::vector<std::complex<double>> row;
      for (std::size_t g = lo; g < hi; ++g) {
        b.hurwitz_row(grid[g], row);
        for (std::size_t e = 0; e < evs.size(); ++e)
          zvals[e][g] = evs[e].z_from_l(grid[g], evs[e].l_from_row(grid[g], row));
      }
    };
    if (nw == 1) {
      work_chunk(0, grid.size(), *bank);
      return;
    }
    // Private banks per worker: the shared cache is not synchronized.
    std::vector<std::thread> pool;
    const std::size_t chunk = (grid.size() + nw - 1) / nw;
    std::vector<std::unique_ptr<ModulusBank>> banks;
    for (int w = 0; w < nw; ++w) banks.push_back(std::make_unique<ModulusBank>(q));
    for (int w = 0; w < nw; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(grid.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi, w] { work_chunk(lo, hi, *banks[w]); });
    }
    for (auto& th : pool) th.join();
  };

  const double base_step =
      2.0 * kPi / (8.0 * std::log(static_cast<double>(q) * (height + 2.0)));
  std::vector<double> grid;
  std::vector<std::vector<double>> zvals;
  run_scan(base_step, zvals, grid);

  std::vector<ZeroList> lists(evs.size());
  std::vector<std::complex<double>> row0;
  bank->hurwitz_row(0.0, row0);
  for (std::size_t e = 0; e < evs.size(); ++e) {
    ZeroList& zl = lists[e];
    zl.q = q;
    zl.char_index = order[e];
    zl.height = height;
    zl.ordinates = scan_one(evs[e], grid, zvals[e], &zl.residuals);
    zl.possible_central_zero = std::abs(evs[e].l_from_row(0.0, row0)) < 1e-8;
    zl.n_central = 0;
  }

  // Two-sided completeness against the explicit zero-count band, with one
  // halved-step retry for a failing conjugate pair.
  auto band_ok = [&](const ZeroList& a, const ZeroList& b, int parity) {
    const double chi_m1 = parity == 0 ? 1.0 : -1.0;
    const double main = zero_count_main(q, height, chi_m1);
    const double band = zero_count_band(q, height);
    const double n2 = static_cast<double>(a.ordinates.size() + b.ordinates.size() +
                                          a.n_central);
    return std::fabs(n2 - main) <= band;
  };
  auto idx_of = [&](std::size_t char_index) {
    return static_cast<std::size_t>(
        std::find(order.begin(), order.end(), char_index) - order.begin());
  };
  const bool band_valid = zero_count_band_valid(q, height);
  std::set<std::size_t> retried;
  for (std::size_t e = 0; e < evs.size(); ++e) {
    ZeroList& zl = lists[e];
    zl.band_checked = band_valid;
    if (!band_valid) {
      zl.complete = true;
      continue;
    }
    const std::size_t pe = idx_of(table.conjugate_index(order[e]));
    const int parity = table.character(order[e]).parity;
    if (!band_ok(lists[e], lists[pe], parity) && !retried.count(e)) {
      retried.insert(e);
      retried.insert(pe);
      std::vector<double> fine_grid;
      std::vector<std::vector<double>> fine_z;
      run_scan(0.5 * base_step, fine_z, fine_grid);
      for (std::size_t ee : {e, pe}) {
        lists[ee].residuals.clear();
        lists[ee].ordinates =
            scan_one(evs[ee], fine_grid, fine_z[ee], &lists[ee].residuals);
      }
    }
    zl.complete = band_ok(lists[e], lists[pe], parity);
  }
  // Second pass so partners reflect post-retry counts.
  for (std::size_t e = 0; e < evs.size(); ++e) {
    if (!lists[e].band_checked) continue;
    const std::size_t pe = idx_of(table.conjugate_index(order[e]));
    lists[e].complete =
        band_ok(lists[e], lists[pe], table.character(order[e]).parity);
  }
  return lists;
}

ZeroList find_zeros(const CharacterTable& table, std::size_t index,
                    double height) {
  auto lists = scan_characters(table, {index}, height);
  for (auto& zl : lists)
    if (zl.char_index == index) return zl;
  throw capacity_error("find_zeros: scan did not return the requested index");
}

GammaStats gamma_stats(const CharacterTable& table, std::size_t index,
                       double height) {
  auto lists = scan_characters(table, {index}, height);
  const std::size_t conj = table.conjugate_index(index);
  GammaStats st;
  double lowest = std::numeric_limits<double>::infinity();
  bool complete = true;
  for (const auto& zl : lists) {
    if (zl.char_index != index && zl.char_index != conj) continue;
    if (!zl.ordinates.empty()) lowest = std::min(lowest, zl.ordinates.front());
    st.possible_central_zero =
        st.possible_central_zero || zl.possible_central_zero;
    st.n_central = std::max(st.n_central, zl.n_central);
    complete = complete && zl.complete;
  }
  st.gamma1 = lowest;
  st.gamma1_nonreal = lowest;  // n_central = 0 is never asserted otherwise
  st.complete = complete;
  return st;
}

std::string zero_list_csv(const std::vector<ZeroList>& lists) {
  std::string out = "q,char_index,gamma,refined_residual\n";
  char buf[128];
  for (const auto& zl : lists)
    for (std::size_t i = 0; i < zl.ordinates.size(); ++i) {
      const double res = i < zl.residuals.size() ? zl.residuals[i] : 0.0;
      std::snprintf(buf, sizeof buf, "%llu,%zu,%.12f,%.3e\n",
                    static_cast<unsigned long long>(zl.q), zl.char_index,
                    zl.ordinates[i], res);
      out += buf;
    }
  return out;
}

}  // namespace lowzero
