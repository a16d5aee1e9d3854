#include "anonrs/anonshare.hpp"

#include <algorithm>
#include <string>

#include "anonrs/error.hpp"
#include "anonrs/rng.hpp"

namespace anonrs {
namespace {

struct Search {
  const Scheme& scheme;
  std::span<const Element> shares;
  std::vector<int> assigned;  // participant index (0-based) for shares[0..]
  std::vector<char> used;
  std::vector<Polynomial> found;

  void run(std::size_t depth) {
    const std::size_t k = static_cast<std::size_t>(scheme.k);
    if (depth == k) {
      complete();
      return;
    }
    for (int p = 0; p < scheme.n; ++p) {
      if (used[p]) continue;
      used[p] = 1;
      assigned.push_back(p);
      run(depth + 1);
      assigned.pop_back();
      used[p] = 0;
    }
  }

  // The first k shares pin down f; the rest must match f on unused points.
  void complete() {
    std::vector<std::pair<Element, Element>> pts;
    pts.reserve(assigned.size());
    for (std::size_t j = 0; j < assigned.size(); ++j) pts.emplace_back(scheme.alpha[assigned[j]], shares[j]);
    Polynomial f = interpolate(pts);
    std::vector<Element> free_values;
    for (int p = 0; p < scheme.n; ++p) {
      if (!used[p]) free_values.push_back(f(scheme.alpha[p]));
    }
    std::vector<Element> rest(shares.begin() + static_cast<std::ptrdiff_t>(assigned.size()), shares.end());
    std::sort(free_values.begin(), free_values.end());
    std::sort(rest.begin(), rest.end());
    if (!std::includes(free_values.begin(), free_values.end(), rest.begin(), rest.end())) return;
    if (std::find(found.begin(), found.end(), f) == found.end()) found.push_back(std::move(f));
  }
};

}  // namespace

ShareBundle share(const Scheme& scheme, const Element& secret, std::uint64_t seed, bool allow_uncertified) {
  if (scheme.certified == Certification::none && !allow_uncertified) {
    raise(Errc::refused, "scheme is not certified robust; pass the override to share anyway");
  }
  validate_scheme(scheme);
  if (!(secret.field() == scheme.field)) raise(Errc::field_mismatch, "secret is from another field");
  Rng rng(seed);
  std::vector<Element> coeffs{secret};
  for (int i = 1; i < scheme.k; ++i) coeffs.push_back(scheme.field.random(rng));
  Polynomial f(scheme.field, std::move(coeffs));
  std::vector<Element> out;
  out.reserve(scheme.n);
  for (const auto& a : scheme.alpha) out.push_back(poly_eval(f, a));
  return ShareBundle{std::move(f), std::move(out)};
}

std::vector<Polynomial> recon_candidates(const Scheme& scheme, std::span<const Element> shares) {
  if (shares.size() < static_cast<std::size_t>(scheme.k)) {
    raise(Errc::contract, "need at least k=" + std::to_string(scheme.k) + " shares");
  }
  if (shares.size() > static_cast<std::size_t>(scheme.n)) {
    raise(Errc::contract, "more shares than participants");
  }
  for (const auto& s : shares) {
    if (!(s.field() == scheme.field)) raise(Errc::field_mismatch, "share is from another field");
  }
  Search search{scheme, shares, {}, std::vector<char>(scheme.n, 0), {}};
  search.run(0);
  return std::move(search.found);
}

Element recon(const Scheme& scheme, std::span<const Element> shares) {
  const std::size_t need = 2 * static_cast<std::size_t>(scheme.k) - 1;
  if (shares.size() != need) {
    raise(Errc::contract, "expected exactly " + std::to_string(need) + " shares, got " +
                              std::to_string(shares.size()));
  }
  const auto candidates = recon_candidates(scheme, shares);
  if (candidates.empty()) raise(Errc::invalid_shares, "no assignment of participants explains the shares");
  const Element secret = candidates.front().coeff(0);
  for (const auto& f : candidates) {
    if (!(f.coeff(0) == secret)) {
      raise(Errc::robustness_violated, "consistent assignments give secrets " + secret.to_string() +
                                           " and " + f.coeff(0).to_string());
    }
  }
  return secret;
}

ShareTally share_distribution(const Scheme& scheme, const Element& secret, const DistinctSeq& i,
                              std::uint64_t guard) {
  if (i.size() + 1 > static_cast<std::size_t>(scheme.k)) {
    raise(Errc::contract, "anonymity is only claimed for at most k-1 shares");
  }
  for (int v : i.items()) {
    if (v > scheme.n) raise(Errc::contract, "participant " + std::to_string(v) + " does not exist");
  }
  const auto q = scheme.field.order();
  std::uint64_t total = 1;
  for (int e = 1; e < scheme.k; ++e) {
    if (!q || *q > guard || total > guard / *q) {
      raise(Errc::refused, "enumerating q^" + std::to_string(scheme.k - 1) +
                               " polynomials exceeds the guard of " + std::to_string(guard));
    }
    total *= *q;
  }
  ShareTally tally;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Element> coeffs{secret};
    std::uint64_t rest = idx;
    for (int e = 1; e < scheme.k; ++e) {
      coeffs.push_back(scheme.field.element_at(rest % *q));
      rest /= *q;
    }
    const Polynomial f(scheme.field, std::move(coeffs));
    std::vector<Element> key;
    for (int v : i.items()) key.push_back(f(scheme.alpha[v - 1]));
    ++tally[key];
  }
  return tally;
}

}  // namespace anonrs
