#pragma once

// Weight decomposition of the complexified normal bundle of the fixed-point
// set, nu = sum_{n>0} E_n (x) C_n, and its equivariant Euler class
// Lambda_{-1}(nu) at Chern-character level.

#include "equindex/charclasses.hpp"
#include "equindex/cohomology.hpp"
#include "equindex/series.hpp"

#include <utility>
#include <vector>

namespace equindex {

class NormalDecomposition {
 public:
  struct Component {
    int weight;
    RootBundle bundle;
  };

  explicit NormalDecomposition(ManifoldModel model) : model_(std::move(model)) {}

  /// Throws WeightError for weights <= 0 and ModelMismatch for bundles over
  /// another model. Repeated weights are merged by direct sum and the
  /// components are kept sorted by weight.
  NormalDecomposition(ManifoldModel model, std::vector<Component> components);

  const ManifoldModel& model() const noexcept { return model_; }
  const std::vector<Component>& components() const noexcept { return components_; }
  bool empty() const noexcept { return components_.empty(); }

 private:
  ManifoldModel model_;
  std::vector<Component> components_;
};

/// Normal bundle of the constant loops inside the free loop space:
/// (T (x) C) (x) C_k for k = 1..order. Weights above the order cannot reach
/// a coefficient of q^order and are omitted.
NormalDecomposition loop_normal_decomposition(const RootBundle& tangent, int order);

/// prod over components of lambda_minus_t_factor, truncated past q^order.
/// The q^0 coefficient is the unit class.
QSeries<CohClass> euler_class(const NormalDecomposition& decomp, int order);

/// Reciprocal of euler_class in the positive-completed ring.
QSeries<CohClass> inverse_euler_class(const NormalDecomposition& decomp, int order);

}  // namespace equindex
