#include "equindex/io.hpp"

#include "equindex/errors.hpp"
#include "equindex/numbers.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>

namespace equindex {

using nlohmann::json;

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

namespace {

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items())
    if (!ok.contains(key)) throw SchemaError(path.empty() ? key : path + "." + key, "unknown field");
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) throw SchemaError(path.empty() ? key : path + "." + key, "missing");
  return obj.at(key);
}

int to_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
      throw SchemaError(path, "integer out of range");
    return static_cast<int>(v);
  }
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw SchemaError(path, "integer out of range");
  return static_cast<int>(v);
}

Rational to_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected an integer or a rational string \"p/q\"");
}

std::vector<Rational> roots(const json& obj, const char* key, const std::string& path) {
  std::vector<Rational> out;
  if (!obj.contains(key)) return out;
  const std::string p = path + "." + key;
  const json& arr = obj.at(key);
  if (!arr.is_array()) throw SchemaError(p, "expected an array of roots");
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(to_rational(arr[i], p + "[" + std::to_string(i) + "]"));
  return out;
}

RootBundle bundle(const json& obj, const std::string& path, const ManifoldModel& model) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  return RootBundle{roots(obj, "plus", path), roots(obj, "minus", path), model};
}

}  // namespace

ProblemSpec parse_problem(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  return parse_problem_document(doc);
}

ProblemSpec parse_problem_document(const json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "problem must be a JSON object");
  check_keys(doc, "", {"manifold", "tangent", "normal", "F", "L", "order"});

  const json& m = require(doc, "manifold", "");
  if (!m.is_string()) throw SchemaError("manifold", "expected a string");
  ManifoldModel model;
  try {
    model = parse_model(m.get<std::string>());
  } catch (const UnsupportedModel& e) {
    throw SchemaError("manifold", e.what());
  }

  const json& t = require(doc, "tangent", "");
  if (t.is_object()) check_keys(t, "tangent", {"plus", "minus"});
  RootBundle tangent = bundle(t, "tangent", model);

  const json& n = require(doc, "normal", "");
  std::variant<LoopNormal, NormalDecomposition> normal = LoopNormal{};
  if (n.is_string()) {
    if (n.get<std::string>() != "loop") throw SchemaError("normal", "expected \"loop\" or an array");
  } else if (n.is_array()) {
    std::vector<NormalDecomposition::Component> comps;
    for (std::size_t i = 0; i < n.size(); ++i) {
      const std::string p = "normal[" + std::to_string(i) + "]";
      if (!n[i].is_object()) throw SchemaError(p, "expected an object");
      check_keys(n[i], p, {"weight", "plus", "minus"});
      const int w = to_int(require(n[i], "weight", p), p + ".weight");
      if (w <= 0)
        throw WeightError(p + ".weight: normal weights must be positive, got " + std::to_string(w));
      RootBundle b = bundle(n[i], p, model);
      if (!b.is_genuine()) throw SchemaError(p + ".minus", "normal components must be genuine bundles");
      comps.push_back({w, std::move(b)});
    }
    normal = NormalDecomposition(model, std::move(comps));
  } else {
    throw SchemaError("normal", "expected \"loop\" or an array");
  }

  const json& f = require(doc, "F", "");
  if (!f.is_array()) throw SchemaError("F", "expected an array");
  std::vector<EquivariantBundle::Term> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::string p = "F[" + std::to_string(i) + "]";
    if (!f[i].is_object()) throw SchemaError(p, "expected an object");
    check_keys(f[i], p, {"weight", "plus", "minus"});
    const int w = to_int(require(f[i], "weight", p), p + ".weight");
    terms.push_back({w, bundle(f[i], p, model)});
  }

  DifferenceLine L;
  if (doc.contains("L")) {
    const json& l = doc.at("L");
    if (!l.is_object()) throw SchemaError("L", "expected an object");
    check_keys(l, "L", {"sign", "weight"});
    if (l.contains("sign")) L.sign = to_int(l.at("sign"), "L.sign");
    if (L.sign != 1 && L.sign != -1) throw SchemaError("L.sign", "must be 1 or -1");
    if (l.contains("weight")) L.weight = to_int(l.at("weight"), "L.weight");
  }

  int order = kDefaultOrder;
  if (doc.contains("order")) {
    order = to_int(doc.at("order"), "order");
    if (order < 0) throw SchemaError("order", "must be nonnegative");
  }

  return ProblemSpec{model, std::move(tangent), std::move(normal),
                     EquivariantBundle(model, std::move(terms)), L, order};
}

nlohmann::ordered_json series_to_json(const QSeries<Rational>& s) {
  nlohmann::ordered_json out;
  out["lowest"] = s.lowest();
  out["order"] = s.order();
  out["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : s.coeffs()) out["coeffs"].push_back(c.get_str());
  return out;
}

nlohmann::ordered_json series_to_json(const QSeries<CohClass>& s) {
  nlohmann::ordered_json out;
  out["lowest"] = s.lowest();
  out["order"] = s.order();
  out["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : s.coeffs()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : c.coeffs()) arr.push_back(v.get_str());
    out["coeffs"].push_back(std::move(arr));
  }
  return out;
}

QSeries<Rational> series_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "series must be a JSON object");
  check_keys(doc, "", {"lowest", "order", "coeffs"});
  const int lowest = to_int(require(doc, "lowest", ""), "lowest");
  const int order = to_int(require(doc, "order", ""), "order");
  const json& c = require(doc, "coeffs", "");
  if (!c.is_array()) throw SchemaError("coeffs", "expected an array");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < c.size(); ++i)
    coeffs.push_back(to_rational(c[i], "coeffs[" + std::to_string(i) + "]"));
  return QSeries<Rational>(lowest, std::move(coeffs), order);
}

std::string preset_spec_json(std::string_view preset) {
  // Build from the preset itself so the two cannot drift apart.
  const ProblemSpec spec = preset_problem(preset, kDefaultOrder);
  auto roots_json = [](const std::vector<Rational>& rs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) {
      if (is_integer(r))
        arr.push_back(std::stoll(r.get_str()));
      else
        arr.push_back(r.get_str());
    }
    return arr;
  };
  nlohmann::ordered_json doc;
  doc["manifold"] = spec.model.name;
  doc["tangent"] = {{"plus", roots_json(spec.tangent.plus_roots)},
                    {"minus", roots_json(spec.tangent.minus_roots)}};
  if (std::holds_alternative<LoopNormal>(spec.normal)) {
    doc["normal"] = "loop";
  } else {
    doc["normal"] = nlohmann::ordered_json::array();
    for (const auto& c : std::get<NormalDecomposition>(spec.normal).components())
      doc["normal"].push_back({{"weight", c.weight}, {"plus", roots_json(c.bundle.plus_roots)}});
  }
  doc["F"] = nlohmann::ordered_json::array();
  for (const auto& t : spec.F.terms())
    doc["F"].push_back({{"weight", t.weight},
                        {"plus", roots_json(t.bundle.plus_roots)},
                        {"minus", roots_json(t.bundle.minus_roots)}});
  doc["L"] = {{"sign", spec.L.sign}, {"weight", spec.L.weight}};
  return doc.dump();
}

}  // namespace equindex
