#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fpreg {

using cplx = std::complex<double>;

// Pairwise (tree) summation with a fixed split order, so results do not
// depend on how the caller's work was scheduled.
template <typename T>
T pairwise_sum(std::span<const T> xs) {
  const std::size_t n = xs.size();
  if (n == 0) return T{};
  if (n <= 8) {
    T acc = xs[0];
    for (std::size_t i = 1; i < n; ++i) acc += xs[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& xs) {
  return pairwise_sum(std::span<const T>(xs));
}

}  // namespace fpreg
