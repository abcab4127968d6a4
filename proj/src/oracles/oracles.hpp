#pragma once

// Brute-force references for the engine. Nothing here calls qs_invert,
// the Euler-class code or the index pipeline.

#include "equindex/numbers.hpp"
#include "equindex/ring.hpp"
#include "equindex/series.hpp"

#include <vector>

namespace equindex::oracles {

/// p(0..n), counted by a bounded-part table: after processing part size k,
/// entry j holds the number of partitions of j into parts <= k.
std::vector<Integer> partition_numbers(int n);

/// Every partition of n as a nonincreasing list of parts.
std::vector<std::vector<int>> enumerate_partitions(int n);

/// sum_{m=0}^{n} p(m) p(n - m) for n = 0..order.
std::vector<Integer> partition_self_convolution(int order);

/// Long division: b_0 = c^{-1}, b_j = -c^{-1} sum_{i=1}^{j} a_i b_{j-i}.
/// Returns the reciprocal known to q^order. Throws NotInvertible.
template <class R>
QSeries<R> naive_inverse(const QSeries<R>& a, int order) {
  using traits = ring_traits<R>;
  if (a.is_zero()) throw NotInvertible("zero series");
  const R& lead = a.coeffs().front();
  if (!traits::is_unit(lead)) throw NotInvertible("leading coefficient is not a unit");
  const R inv = traits::unit_inverse(lead);
  const int count = order + a.lowest() + 1;
  std::vector<R> b;
  for (int j = 0; j < count; ++j) {
    if (j == 0) {
      b.push_back(inv);
      continue;
    }
    R acc = traits::zero_like(lead);
    for (int i = 1; i <= j && i < static_cast<int>(a.coeffs().size()); ++i)
      acc += a.coeffs()[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j - i)];
    b.push_back(R(-(inv * acc)));
  }
  return QSeries<R>(-a.lowest(), std::move(b), order);
}

/// Index of C with weight k at the origin, F = sum_n c_n q^n (c_n at
/// position n), written out as the double sum
///   k > 0:  sum_n c_n (q^n + q^{n+k} + q^{n+2k} + ...)
///   k < 0:  -q^{|k|} sum_n c_n (q^n + q^{n+|k|} + ...)
/// truncated past q^order.
QSeries<Rational> direct_cplane_index(int k, const std::vector<Integer>& c, int order);

}  // namespace equindex::oracles
