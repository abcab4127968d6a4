#include "equindex/localization.hpp"

#include "equindex/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace equindex {

NormalDecomposition::NormalDecomposition(ManifoldModel model, std::vector<Component> components)
    : model_(std::move(model)) {
  std::map<int, RootBundle> merged;
  for (auto& c : components) {
    if (c.weight <= 0)
      throw WeightError("normal weight " + std::to_string(c.weight) +
                        " is not positive; the fixed-point normal bundle carries only positive weights");
    if (!(c.bundle.model == model_))
      throw ModelMismatch("normal component over '" + c.bundle.model.name +
                          "' in a decomposition over '" + model_.name + "'");
    auto it = merged.find(c.weight);
    if (it == merged.end())
      merged.emplace(c.weight, std::move(c.bundle));
    else
      it->second = it->second.direct_sum(c.bundle);
  }
  components_.reserve(merged.size());
  for (auto& [w, b] : merged) components_.push_back({w, std::move(b)});
}

NormalDecomposition loop_normal_decomposition(const RootBundle& tangent, int order) {
  if (!tangent.is_genuine()) throw VirtualBundle("loop-space tangent must be a genuine bundle");
  const RootBundle complexified = tangent.direct_sum(tangent.conjugate());
  std::vector<NormalDecomposition::Component> comps;
  for (int k = 1; k <= order; ++k) comps.push_back({k, complexified});
  return NormalDecomposition(tangent.model, std::move(comps));
}

QSeries<CohClass> euler_class(const NormalDecomposition& decomp, int order) {
  auto e = QSeries<CohClass>::constant(CohClass::unit(decomp.model().top_index), order);
  for (const auto& c : decomp.components()) {
    if (c.weight > order) break;
    e = qs_mul(e, lambda_minus_t_factor(c.bundle, c.weight, order));
  }
  return e;
}

QSeries<CohClass> inverse_euler_class(const NormalDecomposition& decomp, int order) {
  const auto e = euler_class(decomp, order);
  assert(e.lowest() == 0 && e.coeffs().front() == CohClass::unit(decomp.model().top_index));
  return qs_invert(e);
}

}  // namespace equindex
