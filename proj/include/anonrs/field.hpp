#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anonrs/rng.hpp"

namespace anonrs {

enum class FieldKind { prime, extension };

struct FieldSpec {
  FieldKind kind = FieldKind::prime;
  std::uint64_t p = 2;
  std::size_t degree = 1;
  // Extension only: degree + 1 base-field coefficients, low-to-high, monic.
  std::vector<std::uint64_t> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {
struct FieldData;
}

class Element;

// Immutable handle to a finite field F_p or F_p[x]/(m). Copies share the same
// underlying data; two handles compare equal when their specs are equal.
class Field {
 public:
  static Field prime(std::uint64_t p);
  // Verifies that the modulus is monic, reduced and irreducible over F_p.
  static Field extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
  static Field from_spec(const FieldSpec& spec);

  const FieldSpec& spec() const;
  std::uint64_t characteristic() const;
  std::size_t degree() const;
  bool is_prime() const;
  // Field order p^d when it fits in 64 bits.
  std::optional<std::uint64_t> order() const;

  Element zero() const;
  Element one() const;
  // Image of an integer in the prime subfield.
  Element from_int(std::int64_t v) const;
  Element from_coeffs(std::span<const std::uint64_t> coeffs) const;
  // Residue class of x for extensions; for prime fields there is no
  // distinguished generator and this throws contract.
  Element generator() const;

  // Bijection [0, q) -> field (base-p digits as coefficients).
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& e) const;

  Element random(Rng& rng) const;
  Element random_nonzero(Rng& rng) const;

  // Text forms: "17" for prime fields, "c0,c1,...,c_{d-1}" for extensions.
  Element parse(std::string_view text) const;
  std::string format(const Element& e) const;

  // "prime <p>" or "ext <p> <d> <c0,...,cd>"
  std::string describe() const;
  static Field parse_description(std::string_view text);

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;

  friend class Element;
};

class Element {
 public:
  const Field& field() const { return field_; }
  // Exactly degree() coefficients, low-to-high.
  std::span<const std::uint64_t> coeffs() const;

  bool is_zero() const;
  bool is_one() const;

  Element inv() const;
  Element pow(std::uint64_t e) const;
  Element operator-() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);
  Element& operator/=(const Element& o);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }

  // Structural equality; elements of different fields are never equal.
  friend bool operator==(const Element& a, const Element& b);
  // Lexicographic on coefficients; only meaningful within one field.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

  std::string to_string() const { return field_.format(*this); }

 private:
  Element(Field field, std::uint64_t v) : field_(std::move(field)), v_(v) {}
  Element(Field field, std::vector<std::uint64_t> ext)
      : field_(std::move(field)), ext_(std::move(ext)) {}

  void require_same_field(const Element& o) const;

  Field field_;
  std::uint64_t v_ = 0;             // prime fields
  std::vector<std::uint64_t> ext_;  // extension fields

  friend class Field;
};

}  // namespace anonrs
