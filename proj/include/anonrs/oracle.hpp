#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anonrs/error.hpp"
#include "anonrs/polynomial.hpp"
#include "anonrs/scheme.hpp"

// Deliberately naive ground truths. Nothing here calls the fast paths they
// are used to check.
namespace anonrs::oracle {

struct Collision {
  Polynomial f;
  Polynomial g;
  std::vector<int> i;  // 1-based positions into f's codeword
  std::vector<int> j;  // 1-based positions into g's codeword
};

struct RobustVerdict {
  bool robust = true;
  std::optional<Collision> witness;
};

// Enumerates every pair of distinct polynomials of degree < k and every pair
// of distinct-element sequences of length n-t, looking for c_I = c'_J.
// Refuses when q^k * n!/t! exceeds `guard`.
RobustVerdict oracle_robust(const Scheme& scheme, int t, std::uint64_t guard = 50'000'000);

// All nonempty minimal A with {I_a : a in A} = {J_a : a in A}, as sorted
// 1-based position lists in lex order.
std::vector<std::vector<int>> oracle_minimal_subpairs(std::span<const int> i, std::span<const int> j,
                                                      std::size_t guard = 20);

namespace detail {
template <typename T>
std::size_t lcs_rec(const std::vector<T>& x, const std::vector<T>& y, std::size_t a, std::size_t b) {
  if (a == x.size() || b == y.size()) return 0;
  if (x[a] == y[b]) return 1 + lcs_rec(x, y, a + 1, b + 1);
  const std::size_t skip_x = lcs_rec(x, y, a + 1, b);
  const std::size_t skip_y = lcs_rec(x, y, a, b + 1);
  return skip_x > skip_y ? skip_x : skip_y;
}
}  // namespace detail

// Textbook exponential recursion; refuses words longer than 10.
template <typename T>
std::size_t oracle_lcs(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() > 10 || y.size() > 10) {
    raise(Errc::refused, "naive LCS limited to length 10 (cost up to 2^" +
                             std::to_string(x.size() + y.size()) + " calls)");
  }
  return detail::lcs_rec(x, y, 0, 0);
}

}  // namespace anonrs::oracle
