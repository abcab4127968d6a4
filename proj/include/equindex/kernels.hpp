#pragma once

// Cauchy-product kernels behind qs_mul. The serial routine is the reference;
// the OpenMP routine distributes output coefficients over threads. Each output
// coefficient is an independent dot product, so the two must agree exactly.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace equindex::kernels {

/// Below this many output coefficients the parallel path costs more than it
/// saves (bignum products are cheap at low degree).
inline constexpr std::size_t kParallelThreshold = 48;

/// out[k] = sum_i a[i] * b[k - i] for k < out_len.
template <class R>
std::vector<R> convolve_serial(std::span<const R> a, std::span<const R> b,
                               std::size_t out_len, const R& zero) {
  std::vector<R> out(out_len, zero);
  if (a.empty() || b.empty()) return out;
  for (std::size_t k = 0; k < out_len; ++k) {
    const std::size_t lo = k + 1 > b.size() ? k + 1 - b.size() : 0;
    const std::size_t hi = std::min(k, a.size() - 1);
    for (std::size_t i = lo; i <= hi; ++i) out[k] += a[i] * b[k - i];
  }
  return out;
}

template <class R>
std::vector<R> convolve_parallel(std::span<const R> a, std::span<const R> b,
                                 std::size_t out_len, const R& zero) {
  std::vector<R> out(out_len, zero);
  if (a.empty() || b.empty()) return out;
  const auto n = static_cast<std::int64_t>(out_len);
  // Work per k grows then shrinks along the diagonal; dynamic balances it.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t kk = 0; kk < n; ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    const std::size_t lo = k + 1 > b.size() ? k + 1 - b.size() : 0;
    const std::size_t hi = std::min(k, a.size() - 1);
    R acc = zero;
    for (std::size_t i = lo; i <= hi; ++i) acc += a[i] * b[k - i];
    out[k] = std::move(acc);
  }
  return out;
}

template <class R>
std::vector<R> convolve(std::span<const R> a, std::span<const R> b,
                        std::size_t out_len, const R& zero) {
#ifdef _OPENMP
  if (out_len >= kParallelThreshold && omp_get_max_threads() > 1 &&
      !omp_in_parallel())
    return convolve_parallel(a, b, out_len, zero);
#endif
  return convolve_serial(a, b, out_len, zero);
}

}  // namespace equindex::kernels
