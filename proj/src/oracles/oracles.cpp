#include "oracles.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace equindex::oracles {

std::vector<Integer> partition_numbers(int n) {
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int j = k; j <= n; ++j) p[static_cast<std::size_t>(j)] += p[static_cast<std::size_t>(j - k)];
  return p;
}

std::vector<std::vector<int>> enumerate_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Integer> partition_self_convolution(int order) {
  const auto p = partition_numbers(order);
  std::vector<Integer> out(static_cast<std::size_t>(order) + 1, 0);
  for (int n = 0; n <= order; ++n)
    for (int m = 0; m <= n; ++m)
      out[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(m)] * p[static_cast<std::size_t>(n - m)];
  return out;
}

QSeries<Rational> direct_cplane_index(int k, const std::vector<Integer>& c, int order) {
  if (k == 0) throw std::invalid_argument("cplane weight must be nonzero");
  const int step = std::abs(k);
  const int offset = k > 0 ? 0 : step;
  const int sign = k > 0 ? 1 : -1;
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1, 0);
  for (std::size_t n = 0; n < c.size(); ++n)
    for (int e = static_cast<int>(n) + offset; e <= order; e += step)
      coeffs[static_cast<std::size_t>(e)] += sign * Rational(c[n]);
  return QSeries<Rational>(0, std::move(coeffs), order);
}

}  // namespace equindex::oracles
