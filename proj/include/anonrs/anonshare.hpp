#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "anonrs/field.hpp"
#include "anonrs/polynomial.hpp"
#include "anonrs/scheme.hpp"
#include "anonrs/sequences.hpp"

namespace anonrs {

// Dealer-side view: shares[i] belongs to participant i+1.
struct ShareBundle {
  Polynomial polynomial;
  std::vector<Element> shares;
};

// Random f of degree < k with f(0) = secret, drawn from Rng(seed), evaluated
// at every alpha. Refuses schemes with certified=none unless allow_uncertified.
ShareBundle share(const Scheme& scheme, const Element& secret, std::uint64_t seed,
                  bool allow_uncertified = false);

// Every distinct polynomial of degree < k that maps some injective
// assignment of the shares to participants. Needs at least k shares.
std::vector<Polynomial> recon_candidates(const Scheme& scheme, std::span<const Element> shares);

// Secret from exactly 2k-1 shares in any order, without identities.
Element recon(const Scheme& scheme, std::span<const Element> shares);

using ShareTally = std::map<std::vector<Element>, std::uint64_t>;

// Exact distribution of (f(alpha_{I_1}), ..., f(alpha_{I_l})) over all q^{k-1}
// polynomials with f(0) = secret. Refuses when q^{k-1} exceeds `guard`.
ShareTally share_distribution(const Scheme& scheme, const Element& secret, const DistinctSeq& i,
                              std::uint64_t guard = 10'000'000);

}  // namespace anonrs
