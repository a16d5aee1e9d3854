#include "anonrs/oracle.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace anonrs::oracle {
namespace {

void arrangements(int n, int m, std::vector<int>& cur, std::vector<char>& used,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    cur.push_back(v);
    arrangements(n, m, cur, used, out);
    cur.pop_back();
    used[v] = 0;
  }
}

Element power_sum(std::span<const Element> coeffs, const Element& x) {
  Element acc = x.field().zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Element term = coeffs[i];
    for (std::size_t e = 0; e < i; ++e) term = term * x;
    acc = acc + term;
  }
  return acc;
}

}  // namespace

RobustVerdict oracle_robust(const Scheme& scheme, int t, std::uint64_t guard) {
  const int n = scheme.n;
  const int m = n - t;
  if (t < 0 || m < 1) raise(Errc::contract, "need 0 <= t < n");
  const auto q = scheme.field.order();
  if (!q) raise(Errc::refused, "field order exceeds 64 bits");

  long double cost = 1;
  for (int e = 0; e < scheme.k; ++e) cost *= static_cast<long double>(*q);
  const long double polys = cost;
  for (int v = n; v > t; --v) cost *= v;
  if (cost > static_cast<long double>(guard)) {
    raise(Errc::refused, "q^k * n!/t! = " + std::to_string(static_cast<double>(cost)) +
                             " codeword views exceed the guard of " + std::to_string(guard));
  }
  long double key_space = 1;
  for (int e = 0; e < m; ++e) key_space *= static_cast<long double>(*q);
  if (key_space > static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
    raise(Errc::refused, "q^(n-t) does not fit in a 64-bit key");
  }

  std::vector<std::vector<int>> seqs;
  {
    std::vector<int> cur;
    std::vector<char> used(n + 1, 0);
    arrangements(n, m, cur, used, seqs);
  }

  const auto poly_count = static_cast<std::uint64_t>(polys);
  auto coeffs_of = [&](std::uint64_t idx) {
    std::vector<Element> c;
    for (int e = 0; e < scheme.k; ++e) {
      c.push_back(scheme.field.element_at(idx % *q));
      idx /= *q;
    }
    return c;
  };

  // (view key, polynomial, sequence)
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint32_t>> views;
  views.reserve(static_cast<std::size_t>(cost));
  for (std::uint64_t pi = 0; pi < poly_count; ++pi) {
    const auto c = coeffs_of(pi);
    std::vector<std::uint64_t> word;
    for (const auto& a : scheme.alpha) word.push_back(scheme.field.index_of(power_sum(c, a)));
    for (std::uint32_t si = 0; si < seqs.size(); ++si) {
      std::uint64_t key = 0;
      for (int pos : seqs[si]) key = key * *q + word[pos - 1];
      views.emplace_back(key, pi, si);
    }
  }
  std::sort(views.begin(), views.end());
  for (std::size_t a = 1; a < views.size(); ++a) {
    const auto& [k0, p0, s0] = views[a - 1];
    const auto& [k1, p1, s1] = views[a];
    if (k0 != k1 || p0 == p1) continue;
    return RobustVerdict{false, Collision{Polynomial(scheme.field, coeffs_of(p0)),
                                          Polynomial(scheme.field, coeffs_of(p1)), seqs[s0], seqs[s1]}};
  }
  return RobustVerdict{};
}

std::vector<std::vector<int>> oracle_minimal_subpairs(std::span<const int> i, std::span<const int> j,
                                                      std::size_t guard) {
  if (i.size() != j.size()) raise(Errc::contract, "sequence lengths differ");
  const std::size_t s = i.size();
  if (s > guard) raise(Errc::refused, "scanning 2^" + std::to_string(s) + " subsets exceeds the guard");

  const std::uint32_t full = (std::uint32_t{1} << s) - 1;
  std::vector<char> equal(std::size_t{full} + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::vector<int> a, b;
    for (std::size_t p = 0; p < s; ++p) {
      if (mask >> p & 1) {
        a.push_back(i[p]);
        b.push_back(j[p]);
      }
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    equal[mask] = a == b;
  }
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!equal[mask]) continue;
    bool minimal = true;
    for (std::uint32_t sub = (mask - 1) & mask; sub != 0 && minimal; sub = (sub - 1) & mask) {
      if (equal[sub]) minimal = false;
    }
    if (!minimal) continue;
    std::vector<int> set;
    for (std::size_t p = 0; p < s; ++p) {
      if (mask >> p & 1) set.push_back(static_cast<int>(p) + 1);
    }
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace anonrs::oracle
