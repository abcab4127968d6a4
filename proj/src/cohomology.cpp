#include "equindex/cohomology.hpp"

#include "equindex/errors.hpp"

#include <charconv>

namespace equindex {

namespace {

int parse_index(std::string_view text, std::string_view full) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || value < 0)
    throw UnsupportedModel("bad manifold index in '" + std::string(full) + "'");
  return value;
}

void require_same_shape(const CohClass& a, const CohClass& b) {
  if (a.top_index() != b.top_index())
    throw ModelMismatch("cohomology classes of top index " +
                        std::to_string(a.top_index()) + " and " +
                        std::to_string(b.top_index()));
}

}  // namespace

ManifoldModel ManifoldModel::point() { return {"point", 0, Rational(1), 0}; }

ManifoldModel ManifoldModel::sphere() { return {"s2", 1, Rational(1), 2}; }

ManifoldModel ManifoldModel::surface(int genus) {
  if (genus < 0) throw UnsupportedModel("negative genus");
  return {"sigma:" + std::to_string(genus), 1, Rational(1), 2};
}

ManifoldModel ManifoldModel::projective_space(int n) {
  if (n < 1) throw UnsupportedModel("cpn requires n >= 1");
  return {"cpn:" + std::to_string(n), n, Rational(1), 2 * n};
}

bool ManifoldModel::is_surface() const noexcept {
  return name == "s2" || name.starts_with("sigma:");
}

int ManifoldModel::genus() const {
  if (name == "s2") return 0;
  if (name.starts_with("sigma:")) return parse_index(std::string_view(name).substr(6), name);
  throw UnsupportedModel("'" + name + "' is not a surface");
}

ManifoldModel parse_model(std::string_view name) {
  if (name == "point") return ManifoldModel::point();
  if (name == "s2") return ManifoldModel::sphere();
  if (name.starts_with("sigma:")) return ManifoldModel::surface(parse_index(name.substr(6), name));
  if (name.starts_with("cpn:")) return ManifoldModel::projective_space(parse_index(name.substr(4), name));
  throw UnsupportedModel("unknown manifold '" + std::string(name) + "'");
}

CohClass::CohClass(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("CohClass needs at least one coefficient");
}

CohClass CohClass::zero(int top_index) {
  return CohClass(std::vector<Rational>(static_cast<std::size_t>(top_index) + 1));
}

CohClass CohClass::unit(int top_index) { return scalar(Rational(1), top_index); }

CohClass CohClass::scalar(Rational c, int top_index) {
  CohClass out = zero(top_index);
  out.coeffs_[0] = std::move(c);
  return out;
}

CohClass CohClass::monomial(Rational c, int degree, int top_index) {
  CohClass out = zero(top_index);
  if (degree >= 0 && degree <= top_index) out.coeffs_[static_cast<std::size_t>(degree)] = std::move(c);
  return out;
}

bool CohClass::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CohClass::is_scalar() const noexcept {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

CohClass& CohClass::operator+=(const CohClass& o) {
  require_same_shape(*this, o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
  require_same_shape(*this, o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

CohClass& CohClass::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) {
  require_same_shape(a, b);
  const std::size_t n = a.coeffs_.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CohClass(std::move(out));
}

std::string to_string(const CohClass& a) {
  std::vector<detail::RenderedTerm> terms;
  for (std::size_t j = 0; j < a.coeffs().size(); ++j)
    if (a[j] != 0) terms.push_back({a[j].get_str(), static_cast<int>(j), false});
  return detail::render_terms(terms, 'x');
}

bool ring_traits<CohClass>::is_compound(const CohClass& a) { return !a.is_scalar(); }

CohClass coh_mul(const CohClass& a, const CohClass& b, const ManifoldModel& model) {
  if (a.top_index() != model.top_index || b.top_index() != model.top_index)
    throw ModelMismatch("class does not belong to model '" + model.name + "'");
  return a * b;
}

Rational coh_integrate(const CohClass& a, const ManifoldModel& model) {
  if (a.top_index() != model.top_index)
    throw ModelMismatch("class does not belong to model '" + model.name + "'");
  return a[static_cast<std::size_t>(model.top_index)] * model.integral_normalization;
}

CohClass coh_unit_inverse(const CohClass& a) {
  if (a.degree0() == 0) throw NotInvertible("class " + to_string(a) + " has zero degree-0 part");
  const std::size_t n = a.coeffs().size();
  std::vector<Rational> b(n);
  const Rational inv0 = Rational(1) / a[0];
  b[0] = inv0;
  for (std::size_t j = 1; j < n; ++j) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= j; ++i) acc += a[i] * b[j - i];
    b[j] = -acc * inv0;
  }
  return CohClass(std::move(b));
}

template <>
QSeries<CohClass> qs_invert(const QSeries<CohClass>& a) {
  if (a.is_zero()) throw NotInvertible("cannot invert the zero series");
  const CohClass& lead = a.coeffs().front();
  if (!ring_traits<CohClass>::is_unit(lead))
    throw NotInvertible("leading coefficient " + to_string(lead) +
                        " does not have degree-0 part +1 or -1");
  const int m = lead.top_index();

  const QSeries<Rational> scalar = a.map([](const CohClass& c) { return c.degree0(); });
  const QSeries<CohClass> scalar_inverse = lift_scalar(qs_invert(scalar), m);
  const QSeries<CohClass> nilpotent = qs_sub(a, lift_scalar(scalar, m));
  if (nilpotent.is_zero()) return scalar_inverse;

  // a = s (1 + t) with t = nilpotent * s^{-1}; t^(m+1) = 0 in every
  // coefficient, so (1 + t)^{-1} = sum_{k<=m} (-t)^k exactly.
  const QSeries<CohClass> t = qs_mul(nilpotent, scalar_inverse);
  const QSeries<CohClass> one = QSeries<CohClass>::constant(CohClass::unit(m), a.order() - a.lowest());
  QSeries<CohClass> correction = one;
  for (int k = 0; k < m; ++k) correction = qs_sub(one, qs_mul(t, correction));
  return qs_mul(scalar_inverse, correction);
}

QSeries<CohClass> lift_scalar(const QSeries<Rational>& s, int top_index) {
  return s.map([top_index](const Rational& c) { return CohClass::scalar(c, top_index); });
}

QSeries<Rational> integrate_series(const QSeries<CohClass>& s, const ManifoldModel& model) {
  return s.map([&model](const CohClass& c) { return coh_integrate(c, model); });
}

}  // namespace equindex
