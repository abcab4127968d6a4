#include "equindex/charclasses.hpp"

#include "equindex/errors.hpp"

namespace equindex {

namespace {

// e^{r x} in Q[x]/(x^(m+1)).
CohClass exponential(const Rational& r, int m) {
  std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
  Rational term = 1;
  for (int k = 0; k <= m; ++k) {
    c[static_cast<std::size_t>(k)] = term;
    term *= r;
    term /= k + 1;
  }
  return CohClass(std::move(c));
}

}  // namespace

RootBundle RootBundle::trivial(int rank, const ManifoldModel& model) {
  RootBundle e{{}, {}, model};
  if (rank > 0) e.plus_roots.assign(static_cast<std::size_t>(rank), Rational(0));
  if (rank < 0) e.minus_roots.assign(static_cast<std::size_t>(-rank), Rational(0));
  return e;
}

RootBundle RootBundle::direct_sum(const RootBundle& other) const {
  if (!(model == other.model))
    throw ModelMismatch("direct sum of bundles over '" + model.name + "' and '" +
                        other.model.name + "'");
  RootBundle out = *this;
  out.plus_roots.insert(out.plus_roots.end(), other.plus_roots.begin(), other.plus_roots.end());
  out.minus_roots.insert(out.minus_roots.end(), other.minus_roots.begin(), other.minus_roots.end());
  return out;
}

RootBundle RootBundle::conjugate() const {
  RootBundle out = *this;
  for (auto& r : out.plus_roots) r = -r;
  for (auto& r : out.minus_roots) r = -r;
  return out;
}

CohClass chern_character(const RootBundle& e) {
  const int m = e.model.top_index;
  CohClass ch = CohClass::zero(m);
  for (const auto& r : e.plus_roots) ch += exponential(r, m);
  for (const auto& r : e.minus_roots) ch -= exponential(r, m);
  return ch;
}

std::vector<Rational> todd_series_coefficients(int n) {
  // (1 - e^{-r}) / r = sum_k (-1)^k r^k / (k+1)!; invert it by long division.
  std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
  Rational fact = 1;
  for (int k = 0; k <= n; ++k) {
    fact *= k + 1;
    d[static_cast<std::size_t>(k)] = Rational((k % 2 == 0) ? 1 : -1) / fact;
  }
  std::vector<Rational> t(d.size());
  t[0] = 1;
  for (std::size_t k = 1; k < t.size(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += d[i] * t[k - i];
    t[k] = -acc;
  }
  return t;
}

CohClass todd_class(const RootBundle& e) {
  if (!e.is_genuine()) throw VirtualBundle("Todd class requested for a virtual bundle");
  const int m = e.model.top_index;
  const auto t = todd_series_coefficients(m);
  CohClass td = CohClass::unit(m);
  for (const auto& r : e.plus_roots) {
    if (r == 0) continue;
    std::vector<Rational> factor(t.size());
    Rational power = 1;
    for (std::size_t k = 0; k < t.size(); ++k) {
      factor[k] = t[k] * power;
      power *= r;
    }
    td = td * CohClass(std::move(factor));
  }
  return td;
}

QSeries<CohClass> lambda_minus_t_factor(const RootBundle& e, int weight, int order) {
  if (!e.is_genuine()) throw VirtualBundle("exterior class requested for a virtual bundle");
  if (weight <= 0) throw WeightError("exterior class weight must be positive");
  const int m = e.model.top_index;
  auto result = QSeries<CohClass>::constant(CohClass::unit(m), order);
  if (weight > order) return result;
  for (const auto& r : e.plus_roots) {
    std::vector<CohClass> f(static_cast<std::size_t>(weight) + 1, CohClass::zero(m));
    f.front() = CohClass::unit(m);
    f.back() = -exponential(r, m);
    result = qs_mul(result, QSeries<CohClass>(0, std::move(f), order));
  }
  return result;
}

}  // namespace equindex
