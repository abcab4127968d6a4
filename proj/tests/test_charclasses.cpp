#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equindex/charclasses.hpp"
#include "equindex/errors.hpp"
#include "test_support.hpp"

using namespace equindex;

namespace {

CohClass cls(std::initializer_list<Rational> c) { return CohClass(std::vector<Rational>(c)); }

RootBundle bundle(std::vector<Rational> plus, const ManifoldModel& model, std::vector<Rational> minus = {}) {
  return RootBundle{std::move(plus), std::move(minus), model};
}

std::vector<Rational> random_roots(std::mt19937_64& rng, int max_count) {
  std::vector<Rational> r;
  const int n = std::uniform_int_distribution<int>(0, max_count)(rng);
  for (int i = 0; i < n; ++i) r.push_back(test::random_rational(rng, 4, 3));
  return r;
}

}  // namespace

TEST_CASE("chern_character goldens") {
  const auto s2 = ManifoldModel::sphere();
  CHECK(chern_character(bundle({2, -2}, s2)) == cls({2, 0}));
  CHECK(chern_character(bundle({0}, s2)) == cls({1, 0}));
  CHECK(chern_character(bundle({2}, s2)) == cls({1, 2}));
  CHECK(chern_character(bundle({1}, ManifoldModel::projective_space(3))) ==
        cls({1, 1, Rational(1, 2), Rational(1, 6)}));
  CHECK(chern_character(bundle({}, s2, {0, 0})) == cls({-2, 0}));
}

TEST_CASE("todd_class goldens") {
  const auto s2 = ManifoldModel::sphere();
  CHECK(todd_class(bundle({2}, s2)) == cls({1, 1}));
  for (int g = 0; g <= 5; ++g) {
    const auto sigma = ManifoldModel::surface(g);
    CHECK(todd_class(bundle({2 - 2 * g}, sigma)) == cls({1, 1 - g}));
  }
  CHECK(todd_class(bundle({0}, ManifoldModel::point())) == CohClass::unit(0));
  CHECK(todd_class(bundle({}, s2)) == CohClass::unit(1));
  // CP^2: T + O = 3 O(1); td = 1 + 3x/2 + x^2.
  CHECK(todd_class(bundle({1, 1, 1}, ManifoldModel::projective_space(2))) ==
        cls({1, Rational(3, 2), 1}));
  CHECK_THROWS_AS(todd_class(bundle({2}, s2, {0})), VirtualBundle);
}

TEST_CASE("Todd power series coefficients") {
  const auto t = todd_series_coefficients(6);
  CHECK(t == std::vector<Rational>{1, Rational(1, 2), Rational(1, 12), 0, Rational(-1, 720), 0,
                                   Rational(1, 30240)});
}

TEST_CASE("lambda_minus_t_factor goldens") {
  const auto s2 = ManifoldModel::sphere();
  const auto unit = CohClass::unit(1);
  for (int n = 1; n <= 4; ++n) {
    const auto f = lambda_minus_t_factor(bundle({2, -2}, s2), n, 12);
    std::vector<CohClass> expect(static_cast<std::size_t>(2 * n) + 1, CohClass::zero(1));
    expect.front() = unit;
    expect[static_cast<std::size_t>(n)] = CohClass::scalar(-2, 1);
    expect.back() = unit;
    CHECK(f == QSeries<CohClass>(0, expect, 12));
  }
  const auto pt = ManifoldModel::point();
  CHECK(lambda_minus_t_factor(bundle({0}, pt), 3, 10) ==
        QSeries<CohClass>(0, {cls({1}), cls({0}), cls({0}), cls({-1})}, 10));
  CHECK(lambda_minus_t_factor(bundle({0, 0}, pt), 1, 10) ==
        QSeries<CohClass>(0, {cls({1}), cls({-2}), cls({1})}, 10));
  CHECK(lambda_minus_t_factor(bundle({}, pt), 1, 10) == QSeries<CohClass>::constant(cls({1}), 10));
  // Weight beyond the order contributes nothing visible.
  CHECK(lambda_minus_t_factor(bundle({0}, pt), 11, 10) == QSeries<CohClass>::constant(cls({1}), 10));
  CHECK_THROWS_AS(lambda_minus_t_factor(bundle({0}, pt, {0}), 1, 10), VirtualBundle);
}

TEST_CASE("chern_character is additive and multiplicative on roots") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    const auto model = ManifoldModel::projective_space(m);
    const auto e = bundle(random_roots(rng, 4), model, random_roots(rng, 3));
    const auto f = bundle(random_roots(rng, 4), model, random_roots(rng, 3));
    CHECK(chern_character(e.direct_sum(f)) == chern_character(e) + chern_character(f));
    CHECK(chern_character(e)[0] == e.virtual_rank());
    const Rational a = test::random_rational(rng, 4, 3), b = test::random_rational(rng, 4, 3);
    CHECK(coh_mul(chern_character(bundle({a}, model)), chern_character(bundle({b}, model)), model) ==
          chern_character(bundle({a + b}, model)));
  }
}

TEST_CASE("todd_class is multiplicative under direct sum") {
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto model = ManifoldModel::projective_space(m);
    const auto e = bundle(random_roots(rng, 4), model);
    const auto f = bundle(random_roots(rng, 4), model);
    CHECK(todd_class(e.direct_sum(f)) == coh_mul(todd_class(e), todd_class(f), model));
  }
}

TEST_CASE("lambda factor structure") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = std::uniform_int_distribution<int>(0, 3)(rng);
    const auto model = m == 0 ? ManifoldModel::point() : ManifoldModel::projective_space(m);
    const int weight = std::uniform_int_distribution<int>(1, 5)(rng);
    const int order = std::uniform_int_distribution<int>(0, 20)(rng);
    const auto f = lambda_minus_t_factor(bundle(random_roots(rng, 4), model), weight, order);
    CHECK(f.lowest() == 0);
    CHECK(f.coeffs().front() == CohClass::unit(m));

    // All roots zero: (1 - q^n)^rank.
    const int rank = std::uniform_int_distribution<int>(0, 5)(rng);
    const auto trivial = lambda_minus_t_factor(RootBundle::trivial(rank, model), weight, order);
    auto expect = QSeries<CohClass>::constant(CohClass::unit(m), order);
    QSeries<CohClass> one_minus(0, {CohClass::unit(m)}, order);
    one_minus = qs_sub(one_minus, QSeries<CohClass>::monomial(CohClass::unit(m), weight, order));
    for (int i = 0; i < rank; ++i) expect = qs_mul(expect, one_minus);
    CHECK(trivial == expect);
  }
}
