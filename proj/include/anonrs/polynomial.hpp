#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "anonrs/field.hpp"

namespace anonrs {

// Univariate polynomial over a Field, coefficients low-to-high with no
// trailing zeros. The zero polynomial has no coefficients and degree
// std::nullopt (minus infinity).
class Polynomial {
 public:
  explicit Polynomial(Field field);
  Polynomial(Field field, std::vector<Element> coeffs);

  const Field& field() const { return field_; }
  std::span<const Element> coeffs() const { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of x^i (zero beyond the degree).
  Element coeff(std::size_t i) const;

  Element operator()(const Element& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void normalize();

  Field field_;
  std::vector<Element> coeffs_;
};

// Horner evaluation.
Element poly_eval(const Polynomial& f, const Element& x);

// Unique polynomial of degree < points.size() through the points. Throws
// duplicate_node when two x coordinates coincide.
Polynomial interpolate(std::span<const std::pair<Element, Element>> points);

// Monic irreducible of degree d over F_p, deterministic in (p, d, seed).
// The result is always confirmed by Rabin's gcd-with-Frobenius test.
Polynomial find_irreducible(std::uint64_t p, std::size_t d, std::uint64_t seed);

// Rabin's test; f must be over a prime field and of degree >= 1.
bool is_irreducible(const Polynomial& f);

}  // namespace anonrs
