#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace anonrs::detail {

using Coeffs = std::vector<std::uint64_t>;

// Dense F_p[x] helpers. Inputs and outputs are trimmed (no trailing zeros;
// the empty vector is the zero polynomial).
void trim(Coeffs& a);
Coeffs fp_sub(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs fp_mul(const Coeffs& a, const Coeffs& b, std::uint64_t p);
// b must be nonzero.
void fp_divmod(const Coeffs& a, const Coeffs& b, std::uint64_t p, Coeffs* quot, Coeffs* rem);
// Monic gcd (zero when both inputs are zero).
Coeffs fp_gcd(Coeffs a, Coeffs b, std::uint64_t p);

// F_p[x] / (m) for a monic m of degree d >= 1. Residues are exactly d
// coefficients, low-to-high.
class PolyModRing {
 public:
  PolyModRing(std::uint64_t p, Coeffs modulus);

  std::uint64_t p() const { return p_; }
  std::size_t degree() const { return d_; }
  const Coeffs& modulus() const { return m_; }
  std::size_t modulus_weight() const { return tail_.size(); }

  Coeffs one() const;
  Coeffs x() const;
  Coeffs mul(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) const;
  Coeffs pow(std::span<const std::uint64_t> a, std::uint64_t e) const;
  std::optional<Coeffs> inverse(std::span<const std::uint64_t> a) const;

  // Reduces a polynomial of any length whose coefficients are already < p.
  Coeffs reduce(std::span<const std::uint64_t> wide) const;

 private:
  // buf holds unreduced sums; `lazy` says the u64 accumulators cannot wrap.
  Coeffs finish(std::vector<std::uint64_t>& buf, bool lazy) const;

  std::uint64_t p_;
  std::size_t d_;
  Coeffs m_;
  // (j, p - m_j) for every nonzero m_j with j < d: x^d == sum of these.
  std::vector<std::pair<std::size_t, std::uint64_t>> tail_;
  bool lazy_mul_;
};

// Linear map a -> a^p on F_p[x]/(m), stored as the matrix whose row j is
// x^(p*j) mod m.
class FrobeniusMap {
 public:
  explicit FrobeniusMap(const PolyModRing& ring);

  Coeffs apply(std::span<const std::uint64_t> a) const;

 private:
  const PolyModRing* ring_;
  bool narrow_;  // p < 2^32: rows stored as uint32
  std::vector<std::uint64_t> wide_rows_;
  std::vector<std::uint32_t> narrow_rows_;
};

// Rabin's test: x^(p^d) == x mod m and gcd(x^(p^(d/r)) - x, m) = 1 for
// every prime r dividing d. m must be monic of degree >= 1.
bool rabin_irreducible(std::uint64_t p, const Coeffs& m);

}  // namespace anonrs::detail
