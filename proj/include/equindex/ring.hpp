#pragma once

#include "equindex/numbers.hpp"

#include <concepts>
#include <string>

namespace equindex {

/// Coefficient-ring interface used by QSeries. A ring type R provides
/// operator+=, operator-=, operator* and unary minus; the traits add
/// the pieces that depend on the ring rather than the value.
///
/// zero_like/one_like take a prototype so that rings whose elements carry
/// a shape (CohClass carries its top index) can build matching constants.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Integer> {
  static Integer zero_like(const Integer&) { return 0; }
  static Integer one_like(const Integer&) { return 1; }
  static bool is_zero(const Integer& a) { return a == 0; }
  static bool is_one(const Integer& a) { return a == 1; }
  // Units of Z are exactly +1 and -1.
  static bool is_unit(const Integer& a) { return a == 1 || a == -1; }
  static Integer unit_inverse(const Integer& a) { return a; }
  static std::string to_string(const Integer& a) { return a.get_str(); }
  static bool is_compound(const Integer&) { return false; }
};

template <>
struct ring_traits<Rational> {
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }
  static bool is_zero(const Rational& a) { return a == 0; }
  static bool is_one(const Rational& a) { return a == 1; }
  static bool is_unit(const Rational& a) { return a != 0; }
  static Rational unit_inverse(const Rational& a) { return Rational(1) / a; }
  static std::string to_string(const Rational& a) { return a.get_str(); }
  static bool is_compound(const Rational&) { return false; }
};

template <class R>
concept CoefficientRing = requires(R a, const R& b) {
  { ring_traits<R>::zero_like(b) } -> std::convertible_to<R>;
  { ring_traits<R>::one_like(b) } -> std::convertible_to<R>;
  { ring_traits<R>::is_zero(b) } -> std::convertible_to<bool>;
  { ring_traits<R>::is_unit(b) } -> std::convertible_to<bool>;
  a += b;
  a -= b;
};

}  // namespace equindex
