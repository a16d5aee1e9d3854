#include "anonrs/construct.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <string>

#include "anonrs/error.hpp"
#include "anonrs/modular.hpp"
#include "anonrs/polynomial.hpp"
#include "anonrs/rng.hpp"
#include "anonrs/sequences.hpp"

namespace anonrs {
namespace {

using u128 = unsigned __int128;

int bit_width(u128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  return hi ? 64 + std::bit_width(hi) : std::bit_width(static_cast<std::uint64_t>(v));
}

[[noreturn]] void too_wide(const std::string& what, int bits) {
  raise(Errc::range, what + " needs " + std::to_string(bits) + " bits; at most 64 are supported");
}

std::uint64_t checked_square_factorial(int m, const char* what) {
  u128 f = 1;
  for (int i = 2; i <= m; ++i) {
    f *= static_cast<unsigned>(i);
    if (f >> 64) too_wide(what, bit_width(f) * 2);
  }
  const u128 sq = f * f;
  if (sq >> 64) too_wide(what, bit_width(sq));
  return static_cast<std::uint64_t>(sq);
}

}  // namespace

std::uint64_t field_size_bound(int n, int k) {
  if (k < 1 || 2 * k - 1 > n) {
    raise(Errc::contract, "need 1 <= 2k-1 <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  long double approx = 1;
  for (int i = 1; i <= 2 * k - 1; ++i) approx = approx * (n - 2 * k + 1 + i) / i;
  for (int i = 2; i <= 2 * k; ++i) approx *= i;
  approx = 200 * approx * approx;
  if (approx >= 0x1p64L) too_wide("field size bound", static_cast<int>(std::floor(std::log2(approx))) + 1);
  u128 base = binomial(n, 2 * k - 1);
  for (int i = 2; i <= 2 * k; ++i) base *= static_cast<unsigned>(i);
  const u128 bound = 200 * base * base;
  if (bound >> 64) too_wide("field size bound", bit_width(bound));
  return static_cast<std::uint64_t>(bound);
}

std::vector<Element> draw_points(const Field& field, int n, std::uint64_t seed, std::uint64_t attempt) {
  if (!field.is_prime()) raise(Errc::contract, "points are drawn from prime fields");
  const std::uint64_t q = field.characteristic();
  if (q - 1 < static_cast<std::uint64_t>(n)) {
    raise(Errc::contract, "F_" + std::to_string(q) + " has fewer than n nonzero elements");
  }
  Rng rng(seed, attempt);
  std::set<std::uint64_t> seen;
  std::vector<Element> alpha;
  while (alpha.size() < static_cast<std::size_t>(n)) {
    const std::uint64_t v = 1 + rng.below(q - 1);
    if (seen.insert(v).second) alpha.push_back(field.element_at(v));
  }
  return alpha;
}

SearchResult random_search(int n, int k, const SearchOptions& opts) {
  if (k < 1 || 2 * k - 1 > n) {
    raise(Errc::contract, "need 1 <= 2k-1 <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  if (opts.max_attempts < 1) raise(Errc::contract, "need at least one attempt");
  std::optional<std::uint64_t> bound;
  try {
    bound = field_size_bound(n, k);
  } catch (const Error&) {
    if (!opts.q) throw;
  }
  const std::uint64_t q = opts.q ? *opts.q : next_prime(*bound);
  const Field field = Field::prime(q);
  if (q - 1 < static_cast<std::uint64_t>(n)) {
    raise(Errc::contract, "F_" + std::to_string(q) + " has fewer than n nonzero elements");
  }

  std::string log;
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    std::vector<Element> alpha = draw_points(field, n, opts.seed, static_cast<std::uint64_t>(attempt));
    const ConditionReport c1 = check_condition1(alpha, k, opts.scan);
    if (!c1.passed()) {
      log += "\n  attempt " + std::to_string(attempt + 1) + ": condition 1 " + describe(c1);
      continue;
    }
    const ConditionReport c2 = check_condition2(alpha, k, opts.scan);
    if (!c2.passed()) {
      log += "\n  attempt " + std::to_string(attempt + 1) + ": condition 2 " + describe(c2);
      continue;
    }
    const ConditionReport full = verify_robust(alpha, k, opts.scan);
    if (!full.passed()) {
      raise(Errc::robustness_violated,
            "both search conditions hold but the kernel check fails at " + describe(full));
    }
    Scheme scheme{n, k, field, std::move(alpha), Certification::full};
    validate_scheme(scheme);
    return SearchResult{std::move(scheme), attempt + 1, bound ? q < *bound : true};
  }
  raise(Errc::search_failed, "no certified points after " + std::to_string(opts.max_attempts) +
                                 " attempts:" + log);
}

Scheme construction27(int k, int n, const ExplicitOptions& opts) {
  if (k < 1 || 2 * k - 1 >= n) {
    raise(Errc::contract, "need 2k-1 < n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  const std::uint64_t kk = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k);
  std::uint64_t ell = 0;
  std::size_t degree = 0;
  if (opts.toy) {
    if (opts.toy->ell < 1 || opts.toy->degree < 1) raise(Errc::contract, "toy ell and degree must be positive");
    ell = opts.toy->ell;
    degree = opts.toy->degree;
  } else {
    ell = checked_square_factorial(2 * k, "ell = ((2k)!)^2");
    const u128 d = static_cast<u128>(kk) * ell;
    if (d >> 63) too_wide("extension degree k^2 ell", bit_width(d));
    degree = static_cast<std::size_t>(d);
  }
  const u128 kl = static_cast<u128>(kk) * ell;
  if (kl >> 62) too_wide("k^2 ell", bit_width(kl));
  std::uint64_t p = 0;
  if (opts.p) {
    p = *opts.p;
    if (p >= kMaxModulus || !is_prime(p)) raise(Errc::contract, std::to_string(p) + " is not a supported prime");
    if (!opts.toy && p <= kl) {
      raise(Errc::contract, "p must exceed k^2 ell = " + std::to_string(static_cast<std::uint64_t>(kl)));
    }
  } else {
    p = next_prime(static_cast<std::uint64_t>(kl) + 1);
  }
  if (static_cast<std::uint64_t>(n) > p) {
    raise(Errc::contract, "n=" + std::to_string(n) + " exceeds p=" + std::to_string(p));
  }

  std::vector<std::uint64_t> modulus;
  if (opts.modulus) {
    modulus = *opts.modulus;
    if (modulus.size() != degree + 1) {
      raise(Errc::contract, "modulus must have degree " + std::to_string(degree));
    }
  } else {
    const Polynomial m = find_irreducible(p, degree, opts.modulus_seed);
    for (const auto& c : m.coeffs()) modulus.push_back(c.coeffs()[0]);
  }
  const Field field = Field::extension(p, std::move(modulus));
  const Element gamma = field.generator();
  std::vector<Element> alpha;
  alpha.reserve(n);
  for (int i = 1; i <= n; ++i) alpha.push_back((gamma - field.from_int(i)).pow(ell));
  Scheme scheme{n, k, field, std::move(alpha), Certification::none};
  validate_scheme(scheme);
  return scheme;
}

}  // namespace anonrs
