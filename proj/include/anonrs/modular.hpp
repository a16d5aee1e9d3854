#pragma once

#include <cstdint>

namespace anonrs {

// Moduli are restricted to p < 2^63 so that a + b never wraps a uint64_t.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 63;

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t neg_mod(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p <= 0xffffffffu) return a * b % p;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

// Inverse modulo a prime; throws division_by_zero for a == 0.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Smallest prime >= lower. Throws range for lower < 2 or when the answer
// would not be below kMaxModulus.
std::uint64_t next_prime(std::uint64_t lower);

}  // namespace anonrs
