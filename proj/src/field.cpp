#include "anonrs/field.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "anonrs/error.hpp"
#include "anonrs/modular.hpp"
#include "field_data.hpp"

namespace anonrs {
namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    raise(Errc::parse, std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string join_coeffs(std::span<const std::uint64_t> c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

void check_prime_modulus(std::uint64_t p) {
  if (p >= kMaxModulus) raise(Errc::range, "modulus " + std::to_string(p) + " is not below 2^63");
  if (!is_prime(p)) raise(Errc::contract, std::to_string(p) + " is not prime");
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  check_prime_modulus(p);
  auto data = std::make_shared<detail::FieldData>();
  data->spec = FieldSpec{FieldKind::prime, p, 1, {}};
  return Field(std::move(data));
}

Field Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  check_prime_modulus(p);
  if (modulus.size() < 2) raise(Errc::contract, "extension modulus must have degree >= 1");
  for (std::uint64_t c : modulus) {
    if (c >= p) raise(Errc::contract, "modulus coefficient " + std::to_string(c) + " not reduced mod p");
  }
  if (modulus.back() != 1) raise(Errc::contract, "extension modulus must be monic");
  if (!detail::rabin_irreducible(p, modulus)) {
    raise(Errc::contract, "modulus is not irreducible over F_" + std::to_string(p));
  }
  auto data = std::make_shared<detail::FieldData>();
  data->spec = FieldSpec{FieldKind::extension, p, modulus.size() - 1, modulus};
  data->ring.emplace(p, std::move(modulus));
  return Field(std::move(data));
}

Field Field::from_spec(const FieldSpec& spec) {
  if (spec.kind == FieldKind::prime) return prime(spec.p);
  if (spec.modulus.size() != spec.degree + 1) {
    raise(Errc::contract, "modulus length does not match degree");
  }
  return extension(spec.p, spec.modulus);
}

const FieldSpec& Field::spec() const { return data_->spec; }
std::uint64_t Field::characteristic() const { return data_->spec.p; }
std::size_t Field::degree() const { return data_->spec.degree; }
bool Field::is_prime() const { return data_->spec.kind == FieldKind::prime; }

std::optional<std::uint64_t> Field::order() const {
  unsigned __int128 q = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    q *= characteristic();
    if (q > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(q);
}

Element Field::zero() const {
  if (is_prime()) return Element(*this, std::uint64_t{0});
  return Element(*this, std::vector<std::uint64_t>(degree(), 0));
}

Element Field::one() const { return from_int(1); }

Element Field::from_int(std::int64_t v) const {
  const std::uint64_t p = characteristic();
  const std::uint64_t magnitude =
      v >= 0 ? static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(-(v + 1)) + 1;
  const std::uint64_t r = v >= 0 ? magnitude % p : neg_mod(magnitude % p, p);
  if (is_prime()) return Element(*this, r);
  std::vector<std::uint64_t> c(degree(), 0);
  c[0] = r;
  return Element(*this, std::move(c));
}

Element Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() != degree()) {
    raise(Errc::contract, "expected " + std::to_string(degree()) + " coefficients");
  }
  for (std::uint64_t c : coeffs) {
    if (c >= characteristic()) raise(Errc::contract, "coefficient not reduced");
  }
  if (is_prime()) return Element(*this, coeffs[0]);
  return Element(*this, std::vector<std::uint64_t>(coeffs.begin(), coeffs.end()));
}

Element Field::generator() const {
  if (is_prime()) raise(Errc::contract, "prime fields have no polynomial generator");
  return Element(*this, data_->ring->x());
}

Element Field::element_at(std::uint64_t index) const {
  const auto q = order();
  if (q && index >= *q) raise(Errc::range, "element index out of range");
  if (is_prime()) return Element(*this, index);
  std::vector<std::uint64_t> c(degree(), 0);
  for (std::size_t i = 0; i < degree() && index != 0; ++i) {
    c[i] = index % characteristic();
    index /= characteristic();
  }
  return Element(*this, std::move(c));
}

std::uint64_t Field::index_of(const Element& e) const {
  if (!(e.field() == *this)) raise(Errc::field_mismatch, "element from another field");
  if (!order()) raise(Errc::range, "field order exceeds 64 bits");
  std::uint64_t index = 0;
  const auto c = e.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) index = index * characteristic() + c[i];
  return index;
}

Element Field::random(Rng& rng) const {
  if (is_prime()) return Element(*this, rng.below(characteristic()));
  std::vector<std::uint64_t> c(degree());
  for (auto& x : c) x = rng.below(characteristic());
  return Element(*this, std::move(c));
}

Element Field::random_nonzero(Rng& rng) const {
  for (;;) {
    Element e = random(rng);
    if (!e.is_zero()) return e;
  }
}

Element Field::parse(std::string_view text) const {
  if (is_prime()) {
    const std::uint64_t v = parse_u64(text, "element");
    if (v >= characteristic()) raise(Errc::parse, "element " + std::string(text) + " not below p");
    return Element(*this, v);
  }
  const auto parts = split(text, ',');
  if (parts.size() != degree()) {
    raise(Errc::parse, "extension element needs " + std::to_string(degree()) + " coefficients");
  }
  std::vector<std::uint64_t> c;
  c.reserve(parts.size());
  for (auto part : parts) {
    const std::uint64_t v = parse_u64(part, "coefficient");
    if (v >= characteristic()) raise(Errc::parse, "coefficient not below p");
    c.push_back(v);
  }
  return Element(*this, std::move(c));
}

std::string Field::format(const Element& e) const {
  if (is_prime()) return std::to_string(e.coeffs()[0]);
  return join_coeffs(e.coeffs());
}

std::string Field::describe() const {
  if (is_prime()) return "prime " + std::to_string(characteristic());
  return "ext " + std::to_string(characteristic()) + " " + std::to_string(degree()) + " " +
         join_coeffs(spec().modulus);
}

Field Field::parse_description(std::string_view text) {
  const auto parts = split(text, ' ');
  if (parts.size() == 2 && parts[0] == "prime") return prime(parse_u64(parts[1], "prime"));
  if (parts.size() == 4 && parts[0] == "ext") {
    const std::uint64_t p = parse_u64(parts[1], "prime");
    const std::uint64_t d = parse_u64(parts[2], "degree");
    std::vector<std::uint64_t> modulus;
    for (auto c : split(parts[3], ',')) modulus.push_back(parse_u64(c, "modulus coefficient"));
    if (modulus.size() != d + 1) raise(Errc::parse, "modulus must have d+1 coefficients");
    return extension(p, std::move(modulus));
  }
  raise(Errc::parse, "bad field description '" + std::string(text) + "'");
}

bool operator==(const Field& a, const Field& b) {
  return a.data_ == b.data_ || a.data_->spec == b.data_->spec;
}

std::span<const std::uint64_t> Element::coeffs() const {
  if (field_.is_prime()) return {&v_, 1};
  return ext_;
}

bool Element::is_zero() const {
  if (field_.is_prime()) return v_ == 0;
  for (std::uint64_t c : ext_) {
    if (c != 0) return false;
  }
  return true;
}

bool Element::is_one() const {
  const auto c = coeffs();
  if (c[0] != 1) return false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] != 0) return false;
  }
  return true;
}

void Element::require_same_field(const Element& o) const {
  if (!(field_ == o.field_)) {
    raise(Errc::field_mismatch, "operands from " + field_.describe() + " and " + o.field_.describe());
  }
}

Element& Element::operator+=(const Element& o) {
  require_same_field(o);
  const std::uint64_t p = field_.characteristic();
  if (field_.is_prime()) {
    v_ = add_mod(v_, o.v_, p);
  } else {
    for (std::size_t i = 0; i < ext_.size(); ++i) ext_[i] = add_mod(ext_[i], o.ext_[i], p);
  }
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_field(o);
  const std::uint64_t p = field_.characteristic();
  if (field_.is_prime()) {
    v_ = sub_mod(v_, o.v_, p);
  } else {
    for (std::size_t i = 0; i < ext_.size(); ++i) ext_[i] = sub_mod(ext_[i], o.ext_[i], p);
  }
  return *this;
}

Element& Element::operator*=(const Element& o) {
  require_same_field(o);
  if (field_.is_prime()) {
    v_ = mul_mod(v_, o.v_, field_.characteristic());
  } else {
    ext_ = field_.data_->ring->mul(ext_, o.ext_);
  }
  return *this;
}

Element& Element::operator/=(const Element& o) {
  require_same_field(o);
  return *this *= o.inv();
}

Element Element::operator-() const {
  Element out = *this;
  const std::uint64_t p = field_.characteristic();
  if (field_.is_prime()) {
    out.v_ = neg_mod(v_, p);
  } else {
    for (auto& c : out.ext_) c = neg_mod(c, p);
  }
  return out;
}

Element Element::inv() const {
  if (is_zero()) raise(Errc::division_by_zero, "inverse of zero");
  if (field_.is_prime()) return Element(field_, inv_mod(v_, field_.characteristic()));
  auto r = field_.data_->ring->inverse(ext_);
  if (!r) raise(Errc::division_by_zero, "element not invertible");
  return Element(field_, std::move(*r));
}

Element Element::pow(std::uint64_t e) const {
  if (field_.is_prime()) return Element(field_, pow_mod(v_, e, field_.characteristic()));
  return Element(field_, field_.data_->ring->pow(ext_, e));
}

bool operator==(const Element& a, const Element& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_prime()) return a.v_ == b.v_;
  return a.ext_ == b.ext_;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  const auto x = a.coeffs();
  const auto y = b.coeffs();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace anonrs
