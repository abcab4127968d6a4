#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equindex/errors.hpp"
#include "equindex/io.hpp"
#include "test_support.hpp"

using namespace equindex;
using QS = QSeries<Rational>;

namespace {

std::string schema_path(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("+5/1") == 5);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("minimal point spec is the cplane:1 preset") {
  const auto spec = parse_problem(
      R"({"manifold":"point","tangent":{"plus":[]},"normal":[{"weight":1,"plus":[0]}],"F":[{"weight":0,"plus":[0]}]})");
  CHECK(spec.order == kDefaultOrder);
  CHECK(spec.L == DifferenceLine{1, 0});
  CHECK(localized_index(spec) == localized_index(preset_problem("cplane:1", kDefaultOrder)));
}

TEST_CASE("loop spec over a genus-2 surface") {
  const auto spec = parse_problem(
      R"({"manifold":"sigma:2","tangent":{"plus":[-2]},"normal":"loop","F":[{"weight":0,"plus":[0]}],"order":3})");
  CHECK(std::holds_alternative<LoopNormal>(spec.normal));
  CHECK(spec.model == ManifoldModel::surface(2));
  CHECK(localized_index(spec) == localized_index(preset_problem("lsigma:2", 3)));
}

TEST_CASE("rational roots and optional fields") {
  const auto spec = parse_problem(R"({"manifold":"cpn:2","tangent":{"plus":[1,1,1]},
      "normal":[{"weight":2,"plus":["1/2",-1],"minus":[]}],
      "F":[{"weight":-1,"plus":[0],"minus":["2/3"]}],"L":{"sign":-1,"weight":4},"order":0})");
  const auto& nd = std::get<NormalDecomposition>(spec.normal);
  CHECK(nd.components()[0].bundle.plus_roots == std::vector<Rational>{Rational(1, 2), -1});
  CHECK(spec.F.terms()[0].bundle.minus_roots == std::vector<Rational>{Rational(2, 3)});
  CHECK(spec.L == DifferenceLine{-1, 4});
  CHECK(spec.order == 0);
}

TEST_CASE("nonpositive normal weight is a WeightError") {
  CHECK_THROWS_AS(parse_problem(R"({"manifold":"point","tangent":{},"normal":[{"weight":0,"plus":[0]}],"F":[]})"),
                  WeightError);
  CHECK_THROWS_AS(parse_problem(R"({"manifold":"point","tangent":{},"normal":[{"weight":-3}],"F":[]})"),
                  WeightError);
}

TEST_CASE("schema errors carry the field path") {
  CHECK(schema_path("[1,2]") == "$");
  CHECK(schema_path("{not json") == "$");
  CHECK(schema_path(R"({"tangent":{},"normal":"loop","F":[]})") == "manifold");
  CHECK(schema_path(R"({"manifold":"klein","tangent":{},"normal":"loop","F":[]})") == "manifold");
  CHECK(schema_path(R"({"manifold":"s2","normal":"loop","F":[]})") == "tangent");
  CHECK(schema_path(R"({"manifold":"s2","tangent":{"plus":[1.5]},"normal":"loop","F":[]})") == "tangent.plus[0]");
  CHECK(schema_path(R"({"manifold":"s2","tangent":{"plus":["x"]},"normal":"loop","F":[]})") == "tangent.plus[0]");
  CHECK(schema_path(R"({"manifold":"s2","tangent":{},"normal":"loops","F":[]})") == "normal");
  CHECK(schema_path(R"({"manifold":"s2","tangent":{},"normal":[{"plus":[1]}],"F":[]})") == "normal[0].weight");
  CHECK(schema_path(R"({"manifold":"s2","tangent":{},"normal":[{"weight":1,"minus":[0]}],"F":[]})") ==
        "normal[0].minus");
  CHECK(schema_path(R"({"manifold":"s2","tangent":{},"normal":"loop","F":[{"weight":"a"}]})") == "F[0].weight");
  CHECK(schema_path(R"({"manifold":"s2","tangent":{},"normal":"loop","F":{}})") == "F");
  CHECK(schema_path(R"({"manifold":"s2","tangent":{},"normal":"loop","F":[],"L":{"sign":2}})") == "L.sign");
  CHECK(schema_path(R"({"manifold":"s2","tangent":{},"normal":"loop","F":[],"order":-1})") == "order");
  CHECK(schema_path(R"({"manifold":"s2","tangent":{},"normal":"loop","F":[],"extra":1})") == "extra");
  CHECK(schema_path(R"({"manifold":"s2","tangent":{"plus":[],"pluss":[]},"normal":"loop","F":[]})") ==
        "tangent.pluss");
}

TEST_CASE("series JSON layout") {
  const QS s(-1, {Rational(2), 0, Rational(-3, 4)}, 5);
  CHECK(series_to_json(s).dump() == R"({"lowest":-1,"order":5,"coeffs":["2","0","-3/4"]})");
  CHECK(series_to_json(QS::zero(3)).dump() == R"({"lowest":0,"order":3,"coeffs":[]})");
  const QSeries<CohClass> c(0, {CohClass({Rational(1), Rational(2)})}, 1);
  CHECK(series_to_json(c).dump() == R"({"lowest":0,"order":1,"coeffs":[["1","2"]]})");
}

TEST_CASE("series JSON round trip") {
  std::mt19937_64 rng(0x10);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = std::uniform_int_distribution<int>(-2, 20)(rng);
    const int lowest = std::uniform_int_distribution<int>(-4, 4)(rng);
    std::vector<Rational> c;
    for (int e = lowest; e <= order; ++e) c.push_back(test::random_rational(rng));
    const QS s(lowest, std::move(c), order);
    CHECK(series_from_json(nlohmann::json::parse(series_to_json(s).dump())) == s);
  }
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"lowest":0,"coeffs":[]})")), SchemaError);
}

TEST_CASE("preset JSON specs reproduce the presets") {
  for (const std::string name : {"cplane:1", "cplane:-3", "cplane:2", "ls2", "lsigma:0", "lsigma:1", "lsigma:3"}) {
    CAPTURE(name);
    auto spec = parse_problem(preset_spec_json(name));
    spec.order = 12;
    const auto via_json = localized_index(spec);
    const auto direct = localized_index(preset_problem(name, 12));
    CHECK(via_json == direct);
    CHECK(series_to_json(via_json).dump() == series_to_json(direct).dump());
  }
}
