#pragma once

// Characteristic classes of virtual bundles given by Chern roots.

#include "equindex/cohomology.hpp"
#include "equindex/numbers.hpp"
#include "equindex/series.hpp"

#include <vector>

namespace equindex {

/// A virtual bundle sum_{plus} L_r - sum_{minus} L_r over a model, where
/// L_r is a line bundle with first Chern class r x. A trivial line is root 0.
struct RootBundle {
  std::vector<Rational> plus_roots;
  std::vector<Rational> minus_roots;
  ManifoldModel model;

  static RootBundle trivial(int rank, const ManifoldModel& model);

  int virtual_rank() const noexcept {
    return static_cast<int>(plus_roots.size()) - static_cast<int>(minus_roots.size());
  }
  bool is_genuine() const noexcept { return minus_roots.empty(); }

  /// Direct sum (multiset union of roots). ModelMismatch on different models.
  RootBundle direct_sum(const RootBundle& other) const;
  /// Complex conjugate: every root r becomes -r.
  RootBundle conjugate() const;

  friend bool operator==(const RootBundle&, const RootBundle&) = default;
};

/// sum_{plus} e^{r x} - sum_{minus} e^{r x}, truncated past x^m.
CohClass chern_character(const RootBundle& e);

/// prod_{plus} r x / (1 - e^{-r x}). Throws VirtualBundle when minus_roots
/// is nonempty.
CohClass todd_class(const RootBundle& e);

/// Chern character of the exterior class Lambda_{-q^weight}(E):
/// prod_{plus} (1 - q^weight e^{r x}), truncated past q^order.
/// Throws VirtualBundle when minus_roots is nonempty.
QSeries<CohClass> lambda_minus_t_factor(const RootBundle& e, int weight, int order);

/// Coefficients t_k of r/(1 - e^{-r}) = sum_k t_k r^k for k <= n.
std::vector<Rational> todd_series_coefficients(int n);

}  // namespace equindex
