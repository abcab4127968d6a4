#pragma once

// Random generators shared by the property tests. Seeds are fixed so
// failures reproduce.

#include "equindex/cohomology.hpp"
#include "equindex/numbers.hpp"
#include "equindex/series.hpp"

#include <random>
#include <vector>

namespace equindex::test {

inline Integer random_integer(std::mt19937_64& rng, int lo, int hi) {
  return Integer(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline Rational random_rational(std::mt19937_64& rng, int span = 9, int max_den = 5) {
  Rational r(std::uniform_int_distribution<int>(-span, span)(rng),
             std::uniform_int_distribution<int>(1, max_den)(rng));
  r.canonicalize();
  return r;
}

inline CohClass random_class(std::mt19937_64& rng, int m) {
  std::vector<Rational> c;
  for (int j = 0; j <= m; ++j) c.push_back(random_rational(rng));
  return CohClass(std::move(c));
}

inline QSeries<Integer> random_int_series(std::mt19937_64& rng, int lowest, int order, int span = 5) {
  std::vector<Integer> c;
  for (int e = lowest; e <= order; ++e) c.push_back(random_integer(rng, -span, span));
  return QSeries<Integer>(lowest, std::move(c), order);
}

/// Integer series with leading coefficient +1 or -1 at q^lowest.
inline QSeries<Integer> random_unit_series(std::mt19937_64& rng, int lowest, int order) {
  std::vector<Integer> c;
  c.push_back((rng() & 1) ? 1 : -1);
  for (int e = lowest + 1; e <= order; ++e) c.push_back(random_integer(rng, -5, 5));
  return QSeries<Integer>(lowest, std::move(c), order);
}

inline QSeries<CohClass> random_coh_series(std::mt19937_64& rng, int m, int lowest, int order,
                                           bool unit_lead) {
  std::vector<CohClass> c;
  for (int e = lowest; e <= order; ++e) c.push_back(random_class(rng, m));
  if (unit_lead) {
    std::vector<Rational> lead(c[0].coeffs().begin(), c[0].coeffs().end());
    lead[0] = (rng() & 1) ? 1 : -1;
    c[0] = CohClass(std::move(lead));
  }
  return QSeries<CohClass>(lowest, std::move(c), order);
}

}  // namespace equindex::test
