#pragma once

// JSON problem specs and series serialization.
//
// Problem schema:
//   { "manifold": "point" | "s2" | "sigma:<g>" | "cpn:<n>",
//     "tangent":  {"plus": [rat...], "minus": [rat...]},
//     "normal":   "loop" | [{"weight": int > 0, "plus": [rat...], "minus": []}, ...],
//     "F":        [{"weight": int, "plus": [rat...], "minus": [rat...]}, ...],
//     "L":        {"sign": 1 | -1, "weight": int},      optional, default {1, 0}
//     "order":    int >= 0 }                            optional, default 10
//
// A rational is a JSON integer or a string "p" / "p/q". Missing "plus" or
// "minus" lists are empty.

#include "equindex/cohomology.hpp"
#include "equindex/index.hpp"
#include "equindex/series.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace equindex {

inline constexpr int kDefaultOrder = 10;

/// Throws SchemaError (with the offending field path) or WeightError.
ProblemSpec parse_problem(std::string_view json_text);
ProblemSpec parse_problem_document(const nlohmann::json& doc);

/// {"lowest": k, "order": N, "coeffs": ["p/q", ...]}
nlohmann::ordered_json series_to_json(const QSeries<Rational>& s);
/// Same layout with each coefficient a list of x-coefficients.
nlohmann::ordered_json series_to_json(const QSeries<CohClass>& s);

/// Inverse of series_to_json for rational series. Throws SchemaError.
QSeries<Rational> series_from_json(const nlohmann::json& doc);

/// A JSON problem text equivalent to the named preset, without "order".
std::string preset_spec_json(std::string_view preset);

}  // namespace equindex
