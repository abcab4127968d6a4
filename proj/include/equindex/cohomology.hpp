#pragma once

// Even rational cohomology of a fixed-point component, modelled as the
// truncated polynomial ring Q[x]/(x^(m+1)) with a fixed value of the
// integral of x^m against the fundamental class.

#include "equindex/numbers.hpp"
#include "equindex/ring.hpp"
#include "equindex/series.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace equindex {

struct ManifoldModel {
  std::string name;               // "point", "s2", "sigma:<g>", "cpn:<n>"
  int top_index = 0;              // x^top_index spans the top even degree
  Rational integral_normalization{1};  // value of the integral of x^top_index
  int real_dimension = 0;

  friend bool operator==(const ManifoldModel&, const ManifoldModel&) = default;

  static ManifoldModel point();
  static ManifoldModel sphere();
  /// Closed oriented surface of genus g.
  static ManifoldModel surface(int genus);
  static ManifoldModel projective_space(int n);

  /// Genus of a surface model ("s2" is genus 0). UnsupportedModel otherwise.
  int genus() const;
  bool is_surface() const noexcept;
};

/// Parses "point" | "s2" | "sigma:<g>" | "cpn:<n>". Throws UnsupportedModel.
ManifoldModel parse_model(std::string_view name);

/// An element sum_j c_j x^j of Q[x]/(x^(m+1)). Products truncate past x^m.
/// Two classes can only be combined when they have the same top index.
class CohClass {
 public:
  /// The zero class of the point model.
  CohClass() : coeffs_(1) {}

  /// coeffs[j] multiplies x^j; the length fixes m + 1 and must be >= 1.
  explicit CohClass(std::vector<Rational> coeffs);

  static CohClass zero(int top_index);
  static CohClass unit(int top_index);
  static CohClass scalar(Rational c, int top_index);
  /// c * x^degree; zero when degree exceeds the top index.
  static CohClass monomial(Rational c, int degree, int top_index);

  int top_index() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t j) const { return coeffs_[j]; }
  const Rational& degree0() const noexcept { return coeffs_.front(); }
  bool is_zero() const noexcept;
  /// True when the class is a multiple of the unit (no x-component).
  bool is_scalar() const noexcept;

  CohClass& operator+=(const CohClass& o);
  CohClass& operator-=(const CohClass& o);
  CohClass& operator*=(const Rational& c);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator-(CohClass a) { return a *= Rational(-1); }
  friend CohClass operator*(const CohClass& a, const CohClass& b);
  friend CohClass operator*(CohClass a, const Rational& c) { return a *= c; }
  friend CohClass operator*(const Rational& c, CohClass a) { return a *= c; }

  friend bool operator==(const CohClass&, const CohClass&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Human-readable form, e.g. "1 + 2x".
std::string to_string(const CohClass& a);

/// Cup product in the model ring. Throws ModelMismatch when either class
/// does not have the model's top index.
CohClass coh_mul(const CohClass& a, const CohClass& b, const ManifoldModel& model);

/// Evaluation on the fundamental class: c_m times the integral normalization.
Rational coh_integrate(const CohClass& a, const ManifoldModel& model);

/// Inverse of a unit class. Solved degree by degree (long division in x).
CohClass coh_unit_inverse(const CohClass& a);

template <>
struct ring_traits<CohClass> {
  static CohClass zero_like(const CohClass& p) { return CohClass::zero(p.top_index()); }
  static CohClass one_like(const CohClass& p) { return CohClass::unit(p.top_index()); }
  static bool is_zero(const CohClass& a) { return a.is_zero(); }
  static bool is_one(const CohClass& a) { return a == CohClass::unit(a.top_index()); }
  /// Units are classes whose degree-0 part is +1 or -1; everything above
  /// degree 0 is nilpotent. This is the integral unit criterion, since
  /// these classes are Chern characters of integral K-theory.
  static bool is_unit(const CohClass& a) {
    return a.degree0() == 1 || a.degree0() == -1;
  }
  static CohClass unit_inverse(const CohClass& a) { return coh_unit_inverse(a); }
  static std::string to_string(const CohClass& a) { return equindex::to_string(a); }
  static bool is_compound(const CohClass& a);
};

/// Inversion over CohClass coefficients: the degree-0 scalar series is
/// inverted first, then the nilpotent x-part is removed by a finite
/// Neumann correction of length top_index.
template <>
QSeries<CohClass> qs_invert(const QSeries<CohClass>& a);

/// Embeds a rational series as multiples of the unit class.
QSeries<CohClass> lift_scalar(const QSeries<Rational>& s, int top_index);

/// Coefficient-wise integration over the model.
QSeries<Rational> integrate_series(const QSeries<CohClass>& s, const ManifoldModel& model);

}  // namespace equindex
