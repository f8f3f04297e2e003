#ifndef LOWZERO_SUMMATION_HPP
#define LOWZERO_SUMMATION_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace lowzero {

// Pairwise (binary tree) summation over a contiguous range.  The tree shape
// depends only on the length, so the result is deterministic for a given
// sequence of terms.
inline double pairwise_sum(std::span<const double> terms) {
  const std::size_t n = terms.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& terms) {
  return pairwise_sum(std::span<const double>(terms.data(), terms.size()));
}

}  // namespace lowzero

#endif
