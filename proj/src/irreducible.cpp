#include <string>

#include "anonrs/error.hpp"
#include "anonrs/modular.hpp"
#include "anonrs/polynomial.hpp"
#include "anonrs/rng.hpp"
#include "poly_mod.hpp"

namespace anonrs {
namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 2; r * r <= n; ++r) {
    if (n % r != 0) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Split d = d0 * t where every prime r | t also divides p - 1. For a monic
// irreducible f of degree d0 whose root is not an r-th power for any such r,
// f(x^t) is irreducible of degree d. This keeps
// large moduli sparse, which makes arithmetic and the Rabin check cheap.
std::pair<std::size_t, std::size_t> split_degree(std::uint64_t p, std::size_t d) {
  std::size_t t = 1;
  std::size_t rest = d;
  for (std::uint64_t r : prime_factors(d)) {
    if ((p - 1) % r != 0) continue;
    std::size_t part = 1;
    while (rest % r == 0) {
      rest /= r;
      part *= r;
    }
    // 4 | t additionally needs p^d0 == 1 mod 4; with p == 3 mod 4 keep one
    // factor 2 in t and leave the rest in d0.
    if (r == 2 && p % 4 == 3 && part > 2) {
      rest *= part / 2;
      part = 2;
    }
    t *= part;
  }
  return {rest, t};
}

}  // namespace

Polynomial find_irreducible(std::uint64_t p, std::size_t d, std::uint64_t seed) {
  if (p >= kMaxModulus) raise(Errc::range, "modulus not below 2^63");
  if (!is_prime(p)) raise(Errc::contract, std::to_string(p) + " is not prime");
  if (d == 0) raise(Errc::contract, "degree must be >= 1");

  const auto [d0, t] = split_degree(p, d);
  const auto t_primes = prime_factors(t);
  Rng rng(seed);
  for (;;) {
    detail::Coeffs f(d0 + 1, 0);
    f[d0] = 1;
    for (std::size_t i = 0; i < d0; ++i) f[i] = rng.below(p);
    if (d > 1 && f[0] == 0) continue;

    if (t > 1) {
      // Norm of a root of f is (-1)^d0 f(0); it must avoid every r-th power.
      const std::uint64_t norm = d0 % 2 == 1 ? neg_mod(f[0], p) : f[0];
      bool ok = true;
      for (std::uint64_t r : t_primes) {
        if (pow_mod(norm, (p - 1) / r, p) == 1) ok = false;
      }
      if (!ok) continue;
    }
    if (d0 > 1 && !detail::rabin_irreducible(p, f)) continue;

    detail::Coeffs m(d + 1, 0);
    for (std::size_t j = 0; j <= d0; ++j) m[j * t] = f[j];
    if (t > 1 && !detail::rabin_irreducible(p, m)) continue;

    const Field fp = Field::prime(p);
    std::vector<Element> coeffs;
    coeffs.reserve(m.size());
    for (std::uint64_t c : m) coeffs.push_back(fp.element_at(c));
    return Polynomial(fp, std::move(coeffs));
  }
}

bool is_irreducible(const Polynomial& f) {
  if (!f.field().is_prime()) raise(Errc::contract, "irreducibility is tested over prime fields");
  const auto deg = f.degree();
  if (!deg || *deg == 0) raise(Errc::contract, "irreducibility needs degree >= 1");
  const std::uint64_t p = f.field().characteristic();
  const Element lead_inv = f.coeffs().back().inv();
  detail::Coeffs m;
  for (const auto& c : f.coeffs()) m.push_back((c * lead_inv).coeffs()[0]);
  return detail::rabin_irreducible(p, m);
}

}  // namespace anonrs
