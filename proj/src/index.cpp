#include "equindex/index.hpp"

#include "equindex/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <map>

namespace equindex {

namespace {

void require_model(const ManifoldModel& expected, const ManifoldModel& got, const char* what) {
  if (!(expected == got))
    throw ModelMismatch(std::string(what) + " lives over '" + got.name +
                        "' but the fixed-point set is '" + expected.name + "'");
}

bool integer_roots(const RootBundle& b) {
  auto integral = [](const Rational& r) { return is_integer(r); };
  return std::all_of(b.plus_roots.begin(), b.plus_roots.end(), integral) &&
         std::all_of(b.minus_roots.begin(), b.minus_roots.end(), integral);
}

int parse_int(std::string_view text, std::string_view preset) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw SchemaError("preset", "malformed preset '" + std::string(preset) + "'");
  return value;
}

}  // namespace

EquivariantBundle::EquivariantBundle(ManifoldModel model, std::vector<Term> terms)
    : model_(std::move(model)) {
  std::map<int, RootBundle> merged;
  for (auto& t : terms) {
    require_model(model_, t.bundle.model, "bundle term");
    auto it = merged.find(t.weight);
    if (it == merged.end())
      merged.emplace(t.weight, std::move(t.bundle));
    else
      it->second = it->second.direct_sum(t.bundle);
  }
  terms_.reserve(merged.size());
  for (auto& [w, b] : merged) terms_.push_back({w, std::move(b)});
}

EquivariantBundle EquivariantBundle::trivial(const ManifoldModel& model) {
  return EquivariantBundle(model, {{0, RootBundle::trivial(1, model)}});
}

EquivariantBundle EquivariantBundle::direct_sum(const EquivariantBundle& other) const {
  require_model(model_, other.model_, "summand");
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return EquivariantBundle(model_, std::move(all));
}

QSeries<Rational> localized_index(const ProblemSpec& spec) {
  const ManifoldModel& model = spec.model;
  require_model(model, spec.tangent.model, "tangent bundle");
  require_model(model, spec.F.model(), "F");
  if (const auto* nd = std::get_if<NormalDecomposition>(&spec.normal))
    require_model(model, nd->model(), "normal decomposition");
  if (spec.order < 0) throw SchemaError("order", "must be nonnegative");
  if (spec.L.sign != 1 && spec.L.sign != -1) throw SchemaError("L.sign", "must be 1 or -1");

  const int order = spec.order;
  auto total = QSeries<Rational>::zero(order);
  const CohClass td = todd_class(spec.tangent);
  if (spec.F.terms().empty()) return total;

  // Negative total shifts eat precision; expand e^{-1} far enough that every
  // shifted term is still known to q^order.
  const int min_shift = spec.F.terms().front().weight + spec.L.weight;
  const int internal = order + std::max(0, -min_shift);

  const NormalDecomposition decomp =
      std::holds_alternative<LoopNormal>(spec.normal)
          ? loop_normal_decomposition(spec.tangent, internal)
          : std::get<NormalDecomposition>(spec.normal);
  const auto weighted = qs_scale(inverse_euler_class(decomp, internal), td);

  for (const auto& term : spec.F.terms()) {
    auto s = integrate_series(qs_scale(weighted, chern_character(term.bundle)), model);
    s = qs_shift(s, term.weight + spec.L.weight);
    if (spec.L.sign < 0) s = qs_neg(s);
    total = qs_add(total, s);
  }
  return total;
}

QSeries<Rational> loop_space_index(const ManifoldModel& surface,
                                   const EquivariantBundle& E, int order) {
  if (!surface.is_surface())
    throw UnsupportedModel("loop-space index needs a surface, got '" + surface.name + "'");
  const int g = surface.genus();
  RootBundle tangent{{Rational(2 - 2 * g)}, {}, surface};
  return localized_index(ProblemSpec{surface, std::move(tangent), LoopNormal{}, E, {}, order});
}

QSeries<Rational> compact_trivial_index(const ManifoldModel& model,
                                        const RootBundle& tangent,
                                        const EquivariantBundle& F) {
  require_model(model, tangent.model, "tangent bundle");
  require_model(model, F.model(), "F");
  const CohClass td = todd_class(tangent);
  if (F.terms().empty()) return QSeries<Rational>::zero(0);
  const int lo = F.terms().front().weight;
  const int hi = F.terms().back().weight;
  std::vector<Rational> coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& t : F.terms())
    coeffs[static_cast<std::size_t>(t.weight - lo)] =
        coh_integrate(coh_mul(chern_character(t.bundle), td, model), model);
  return QSeries<Rational>(lo, std::move(coeffs), std::max(0, hi));
}

bool has_integer_roots(const ProblemSpec& spec) {
  if (!integer_roots(spec.tangent)) return false;
  for (const auto& t : spec.F.terms())
    if (!integer_roots(t.bundle)) return false;
  if (const auto* nd = std::get_if<NormalDecomposition>(&spec.normal))
    for (const auto& c : nd->components())
      if (!integer_roots(c.bundle)) return false;
  return true;
}

bool is_integral(const QSeries<Rational>& s) {
  return std::all_of(s.coeffs().begin(), s.coeffs().end(),
                     [](const Rational& c) { return is_integer(c); });
}

std::vector<QSeries<Rational>> localized_index_batch_serial(std::span<const ProblemSpec> specs) {
  std::vector<QSeries<Rational>> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(localized_index(s));
  return out;
}

std::vector<QSeries<Rational>> localized_index_batch(std::span<const ProblemSpec> specs) {
  std::vector<QSeries<Rational>> out(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
  const auto n = static_cast<std::int64_t>(specs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = localized_index(specs[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

ProblemSpec preset_problem(std::string_view name, int order) {
  if (name.starts_with("cplane:")) {
    const int k = parse_int(name.substr(7), name);
    if (k == 0) throw SchemaError("preset", "cplane weight must be nonzero");
    const auto pt = ManifoldModel::point();
    const int w = std::abs(k);
    NormalDecomposition normal(pt, {{w, RootBundle::trivial(1, pt)}});
    const DifferenceLine L = k > 0 ? DifferenceLine{1, 0} : DifferenceLine{-1, w};
    return ProblemSpec{pt, RootBundle{{}, {}, pt}, std::move(normal),
                       EquivariantBundle::trivial(pt), L, order};
  }
  ManifoldModel surface;
  if (name == "ls2") {
    surface = ManifoldModel::sphere();
  } else if (name.starts_with("lsigma:")) {
    const int g = parse_int(name.substr(7), name);
    if (g < 0) throw SchemaError("preset", "genus must be nonnegative");
    surface = ManifoldModel::surface(g);
  } else {
    throw SchemaError("preset", "unknown preset '" + std::string(name) + "'");
  }
  RootBundle tangent{{Rational(2 - 2 * surface.genus())}, {}, surface};
  return ProblemSpec{surface, std::move(tangent), LoopNormal{},
                     EquivariantBundle::trivial(surface), DifferenceLine{}, order};
}

}  // namespace equindex
