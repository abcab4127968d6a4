#pragma once

// Truncated formal Laurent series in q over an exact coefficient ring.
//
// A QSeries stores the coefficients of q^lowest, q^(lowest+1), ... and the
// order N up to which they are known: the value is determined modulo
// q^(N+1). Only finitely many negative exponents can occur, so these are
// elements of the positive-completed representation ring tensored with
// the coefficients.

#include "equindex/errors.hpp"
#include "equindex/kernels.hpp"
#include "equindex/ring.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace equindex {

template <CoefficientRing R>
class QSeries {
 public:
  using coefficient_type = R;
  using traits = ring_traits<R>;

  /// The zero series known to order 0.
  QSeries() = default;

  /// Coefficient i multiplies q^(lowest + i). Entries past the order are
  /// dropped; leading and trailing zeros are stripped.
  QSeries(int lowest, std::vector<R> coeffs, int order)
      : lowest_(lowest), coeffs_(std::move(coeffs)), order_(order) {
    canonicalize();
  }

  static QSeries zero(int order) { return QSeries(0, {}, order); }

  static QSeries monomial(R c, int exponent, int order) {
    std::vector<R> v;
    v.push_back(std::move(c));
    return QSeries(exponent, std::move(v), order);
  }

  static QSeries constant(R c, int order) { return monomial(std::move(c), 0, order); }

  int lowest() const noexcept { return lowest_; }
  int order() const noexcept { return order_; }
  const std::vector<R>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Highest exponent with a stored coefficient. Meaningless for zero.
  int highest() const noexcept {
    return lowest_ + static_cast<int>(coeffs_.size()) - 1;
  }

  /// Smallest exponent that can carry a nonzero coefficient. A zero series
  /// known to order N is O(q^(N+1)).
  int valuation() const noexcept { return is_zero() ? order_ + 1 : lowest_; }

  /// Pointer to the coefficient of q^exponent, or nullptr when it is zero.
  const R* find(int exponent) const noexcept {
    if (is_zero() || exponent < lowest_ || exponent > highest()) return nullptr;
    const R& c = coeffs_[static_cast<std::size_t>(exponent - lowest_)];
    return traits::is_zero(c) ? nullptr : &c;
  }

  R coefficient(int exponent, const R& zero) const {
    const R* c = find(exponent);
    return c ? *c : zero;
  }

  /// Forget everything above q^new_order. Precision cannot be gained.
  QSeries truncated(int new_order) const {
    if (new_order > order_)
      throw std::invalid_argument("cannot raise truncation order from " +
                                  std::to_string(order_) + " to " +
                                  std::to_string(new_order));
    return QSeries(lowest_, coeffs_, new_order);
  }

  /// Applies f to every coefficient, keeping exponents and order.
  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return QSeries<S>(lowest_, std::move(out), order_);
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.lowest_ == b.lowest_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void canonicalize() {
    if (!coeffs_.empty()) {
      const long keep = static_cast<long>(order_) - lowest_ + 1;
      if (keep <= 0)
        coeffs_.clear();
      else if (static_cast<long>(coeffs_.size()) > keep)
        coeffs_.resize(static_cast<std::size_t>(keep));
    }
    while (!coeffs_.empty() && traits::is_zero(coeffs_.back())) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && traits::is_zero(coeffs_[lead])) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      lowest_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) lowest_ = 0;
  }

  int lowest_ = 0;
  std::vector<R> coeffs_;
  int order_ = 0;
};

namespace detail {

template <class R>
QSeries<R> add_signed(const QSeries<R>& a, const QSeries<R>& b, bool subtract) {
  using traits = ring_traits<R>;
  const int order = std::min(a.order(), b.order());
  if (a.is_zero() && b.is_zero()) return QSeries<R>::zero(order);
  const R& proto = a.is_zero() ? b.coeffs().front() : a.coeffs().front();
  const int lo = std::min(a.is_zero() ? b.lowest() : a.lowest(),
                          b.is_zero() ? a.lowest() : b.lowest());
  const int hi = std::min(order, std::max(a.is_zero() ? b.highest() : a.highest(),
                                          b.is_zero() ? a.highest() : b.highest()));
  if (hi < lo) return QSeries<R>::zero(order);
  std::vector<R> out(static_cast<std::size_t>(hi - lo + 1), traits::zero_like(proto));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const int e = a.lowest() + static_cast<int>(i);
    if (e > hi) break;
    out[static_cast<std::size_t>(e - lo)] += a.coeffs()[i];
  }
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) {
    const int e = b.lowest() + static_cast<int>(i);
    if (e > hi) break;
    if (subtract)
      out[static_cast<std::size_t>(e - lo)] -= b.coeffs()[i];
    else
      out[static_cast<std::size_t>(e - lo)] += b.coeffs()[i];
  }
  return QSeries<R>(lo, std::move(out), order);
}

}  // namespace detail

template <class R>
QSeries<R> qs_add(const QSeries<R>& a, const QSeries<R>& b) {
  return detail::add_signed(a, b, false);
}

template <class R>
QSeries<R> qs_sub(const QSeries<R>& a, const QSeries<R>& b) {
  return detail::add_signed(a, b, true);
}

template <class R>
QSeries<R> qs_neg(const QSeries<R>& a) {
  return a.map([](const R& c) { return R(-c); });
}

/// Multiplication by q^k.
template <class R>
QSeries<R> qs_shift(const QSeries<R>& a, int k) {
  if (a.is_zero()) return QSeries<R>::zero(a.order() + k);
  return QSeries<R>(a.lowest() + k, a.coeffs(), a.order() + k);
}

/// c * a, coefficient by coefficient.
template <class R>
QSeries<R> qs_scale(const QSeries<R>& a, const R& c) {
  return a.map([&c](const R& x) { return R(c * x); });
}

/// Cauchy product. The result is known up to
/// min(a.order + val(b), b.order + val(a)).
template <class R>
QSeries<R> qs_mul(const QSeries<R>& a, const QSeries<R>& b) {
  const int order = std::min(a.order() + b.valuation(), b.order() + a.valuation());
  if (a.is_zero() || b.is_zero()) return QSeries<R>::zero(order);
  const int lo = a.lowest() + b.lowest();
  if (order < lo) return QSeries<R>::zero(order);
  const std::size_t full = a.coeffs().size() + b.coeffs().size() - 1;
  const std::size_t out_len = std::min(full, static_cast<std::size_t>(order - lo + 1));
  auto out = kernels::convolve<R>(std::span<const R>(a.coeffs()),
                                  std::span<const R>(b.coeffs()), out_len,
                                  ring_traits<R>::zero_like(a.coeffs().front()));
  return QSeries<R>(lo, std::move(out), order);
}

/// Reciprocal by the Neumann series: writing a = q^L c (1 + h) with c the
/// leading coefficient and h of positive valuation,
///   a^{-1} = q^{-L} c^{-1} (1 - h + h^2 - ...),
/// which terminates modulo the known precision. The result has lowest
/// exponent -L and order a.order - 2L, so a * a^{-1} = 1 to a.order - L.
///
/// Throws NotInvertible when the leading coefficient is not a unit.
template <class R>
QSeries<R> qs_invert(const QSeries<R>& a) {
  using traits = ring_traits<R>;
  if (a.is_zero()) throw NotInvertible("cannot invert the zero series");
  const R& lead = a.coeffs().front();
  if (!traits::is_unit(lead))
    throw NotInvertible("leading coefficient " + traits::to_string(lead) +
                        " is not a unit of the coefficient ring");
  const int precision = a.order() - a.lowest();
  const R u = traits::unit_inverse(lead);

  std::vector<R> h;
  h.reserve(a.coeffs().size());
  h.push_back(traits::zero_like(lead));
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) h.push_back(R(u * a.coeffs()[i]));
  const QSeries<R> tail(0, std::move(h), precision);
  const QSeries<R> one = QSeries<R>::constant(traits::one_like(lead), precision);

  // Horner form of sum_l (-h)^l: each pass fixes one more coefficient.
  QSeries<R> s = one;
  const int passes = tail.is_zero() ? 0 : precision / std::max(1, tail.lowest());
  for (int l = 0; l < passes; ++l) s = qs_sub(one, qs_mul(tail, s));

  return qs_shift(qs_scale(s, u), -a.lowest());
}

template <class R>
QSeries<R> operator+(const QSeries<R>& a, const QSeries<R>& b) { return qs_add(a, b); }
template <class R>
QSeries<R> operator-(const QSeries<R>& a, const QSeries<R>& b) { return qs_sub(a, b); }
template <class R>
QSeries<R> operator-(const QSeries<R>& a) { return qs_neg(a); }
template <class R>
QSeries<R> operator*(const QSeries<R>& a, const QSeries<R>& b) { return qs_mul(a, b); }

namespace detail {

struct RenderedTerm {
  std::string coefficient;  // signed, e.g. "-3", "1/2", "1 + 2x"
  int exponent;
  bool compound;            // a sum; parenthesized as a whole
};

/// Joins terms as "c0 + c1 v + c2 v^2", lowest exponent first, with explicit
/// signs. Non-integer scalar coefficients are parenthesized before the power.
inline std::string render_terms(const std::vector<RenderedTerm>& terms, char var) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    std::string power;
    if (t.exponent == 1)
      power = std::string(1, var);
    else if (t.exponent != 0)
      power = std::string(1, var) + "^" + std::to_string(t.exponent);

    bool negative = false;
    std::string body;
    if (t.compound) {
      body = power.empty() ? t.coefficient : "(" + t.coefficient + ")";
    } else {
      negative = !t.coefficient.empty() && t.coefficient.front() == '-';
      body = negative ? t.coefficient.substr(1) : t.coefficient;
      if (!power.empty()) {
        if (body == "1")
          body.clear();
        else if (body.find_first_not_of("0123456789") != std::string::npos)
          body = "(" + body + ")";
      }
    }
    const std::string term = body + power;
    if (first)
      out += negative ? "-" + term : term;
    else
      out += negative ? " - " + term : " + " + term;
    first = false;
  }
  return out;
}

}  // namespace detail

/// Human-readable form, e.g. "1 + 2q + 5q^2 - q^3". The zero series is "0".
template <class R>
std::string to_text(const QSeries<R>& a) {
  using traits = ring_traits<R>;
  std::vector<detail::RenderedTerm> terms;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const R& c = a.coeffs()[i];
    if (traits::is_zero(c)) continue;
    terms.push_back({traits::to_string(c), a.lowest() + static_cast<int>(i),
                     traits::is_compound(c)});
  }
  return detail::render_terms(terms, 'q');
}

}  // namespace equindex
