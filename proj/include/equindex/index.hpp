#pragma once

// The localized index of a circle action with compact fixed-point set M:
//
//   ind(F) = integral over M of td(TM) ch(F|_M (x) L (x) e^{-1}(nu)),
//
// valued in truncated q-series. F|_M is supplied already split by weight.

#include "equindex/charclasses.hpp"
#include "equindex/cohomology.hpp"
#include "equindex/localization.hpp"
#include "equindex/series.hpp"

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace equindex {

/// F = sum_a F_a (x) q^a over a fixed-point component with trivial action.
class EquivariantBundle {
 public:
  struct Term {
    int weight;
    RootBundle bundle;
  };

  explicit EquivariantBundle(ManifoldModel model) : model_(std::move(model)) {}
  /// Merges repeated weights by direct sum; terms are sorted by weight.
  EquivariantBundle(ManifoldModel model, std::vector<Term> terms);

  /// The rank-one trivial bundle at weight 0.
  static EquivariantBundle trivial(const ManifoldModel& model);

  const ManifoldModel& model() const noexcept { return model_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  EquivariantBundle direct_sum(const EquivariantBundle& other) const;

 private:
  ManifoldModel model_;
  std::vector<Term> terms_;
};

/// L = sign * q^weight.
struct DifferenceLine {
  int sign = 1;
  int weight = 0;
  friend bool operator==(const DifferenceLine&, const DifferenceLine&) = default;
};

/// Marker for the normal bundle of constant loops in the free loop space.
struct LoopNormal {
  friend bool operator==(const LoopNormal&, const LoopNormal&) = default;
};

struct ProblemSpec {
  ManifoldModel model;
  RootBundle tangent;
  std::variant<LoopNormal, NormalDecomposition> normal;
  EquivariantBundle F;
  DifferenceLine L;
  int order = 10;
};

/// The fixed-point formula. Output is known modulo q^(order+1).
/// Throws ModelMismatch when the data live over different models, and
/// VirtualBundle for a virtual tangent or normal component.
QSeries<Rational> localized_index(const ProblemSpec& spec);

/// Loop-space index of a surface: tangent root 2 - 2g, loop normal bundle,
/// L = +q^0. Throws UnsupportedModel when the model is not a surface.
QSeries<Rational> loop_space_index(const ManifoldModel& surface,
                                   const EquivariantBundle& E, int order);

/// Index for the trivial action on a compact manifold: sum_a (integral of
/// ch(F_a) td(TM)) q^a. The order is the largest weight present (or 0).
QSeries<Rational> compact_trivial_index(const ManifoldModel& model,
                                        const RootBundle& tangent,
                                        const EquivariantBundle& F);

/// True when every root in the spec is an integer, in which case the index
/// of a genuine geometric configuration has integer coefficients.
bool has_integer_roots(const ProblemSpec& spec);

bool is_integral(const QSeries<Rational>& s);

/// Evaluates independent specs, in parallel when OpenMP is available.
/// The first failure (in input order) is rethrown after all have run.
std::vector<QSeries<Rational>> localized_index_batch(std::span<const ProblemSpec> specs);

/// Reference for localized_index_batch: a plain loop.
std::vector<QSeries<Rational>> localized_index_batch_serial(std::span<const ProblemSpec> specs);

/// Named worked examples: "cplane:<k>" (k != 0), "ls2", "lsigma:<g>" (g >= 0).
/// Throws SchemaError on an unknown or malformed name.
ProblemSpec preset_problem(std::string_view name, int order);

}  // namespace equindex
