#include "anonrs/polynomial.hpp"

#include <algorithm>

#include "anonrs/error.hpp"

namespace anonrs {

Polynomial::Polynomial(Field field) : field_(std::move(field)) {}

Polynomial::Polynomial(Field field, std::vector<Element> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) raise(Errc::field_mismatch, "polynomial coefficient from another field");
  }
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Element Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_.zero();
}

Element Polynomial::operator()(const Element& x) const { return poly_eval(*this, x); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_)) raise(Errc::field_mismatch, "polynomials over different fields");
  std::vector<Element> out;
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) + b.coeff(i));
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_)) raise(Errc::field_mismatch, "polynomials over different fields");
  std::vector<Element> out;
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) - b.coeff(i));
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_)) raise(Errc::field_mismatch, "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Element> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.field_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].to_string();
  }
  return out;
}

Element poly_eval(const Polynomial& f, const Element& x) {
  if (!(x.field() == f.field())) raise(Errc::field_mismatch, "evaluation point from another field");
  Element acc = f.field().zero();
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += c[i];
  }
  return acc;
}

Polynomial interpolate(std::span<const std::pair<Element, Element>> points) {
  if (points.empty()) raise(Errc::contract, "interpolation needs at least one point");
  const Field field = points.front().first.field();
  const std::size_t n = points.size();
  for (const auto& [x, y] : points) {
    if (!(x.field() == field) || !(y.field() == field)) {
      raise(Errc::field_mismatch, "interpolation points from different fields");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) {
        raise(Errc::duplicate_node, "node " + points[i].first.to_string() + " appears twice");
      }
    }
  }
  // Newton divided differences, then expand the Newton form into the
  // monomial basis by nested multiplication with (x - x_i).
  std::vector<Element> dd;
  dd.reserve(n);
  for (const auto& pt : points) dd.push_back(pt.second);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  std::vector<Element> acc{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // acc <- acc * (x - x_i) + dd[i]
    std::vector<Element> next(acc.size() + 1, field.zero());
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] -= acc[j] * points[i].first;
    }
    next[0] += dd[i];
    acc = std::move(next);
  }
  return Polynomial(field, std::move(acc));
}

}  // namespace anonrs
