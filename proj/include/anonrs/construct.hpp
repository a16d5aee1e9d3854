#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anonrs/conditions.hpp"
#include "anonrs/scheme.hpp"

namespace anonrs {

// 200 * (C(n, 2k-1) * (2k)!)^2. Throws range, naming the bit width needed,
// when the value does not fit in 64 bits.
std::uint64_t field_size_bound(int n, int k);

struct SearchOptions {
  std::optional<std::uint64_t> q;  // prime; defaults to next_prime(bound)
  std::uint64_t seed = 0;
  int max_attempts = 5;
  ScanOptions scan;
};

struct SearchResult {
  Scheme scheme;
  int attempts = 0;
  bool below_bound = false;
};

// The candidate points random_search tries at the given attempt: n distinct
// nonzero elements of F_q drawn by rejection from Rng(seed, attempt).
std::vector<Element> draw_points(const Field& field, int n, std::uint64_t seed, std::uint64_t attempt);

// Draws n distinct nonzero points from Rng(seed, attempt) until both search
// conditions hold, then confirms with verify_robust. Throws search_failed
// listing each attempt's witness.
SearchResult random_search(int n, int k, const SearchOptions& opts);

struct ToyParams {
  std::uint64_t ell = 0;
  std::size_t degree = 0;
};

struct ExplicitOptions {
  std::optional<std::uint64_t> p;
  std::optional<std::vector<std::uint64_t>> modulus;  // monic, low-to-high
  std::optional<ToyParams> toy;
  std::uint64_t modulus_seed = 0;
};

// alpha_i = (gamma - i)^ell in F_p[gamma] of degree k^2 ell, with
// ell = ((2k)!)^2 and p the least prime above k^2 ell unless overridden.
// The result is uncertified.
Scheme construction27(int k, int n, const ExplicitOptions& opts = {});

}  // namespace anonrs
