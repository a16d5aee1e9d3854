#include "anonrs/sequences.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "anonrs/error.hpp"

namespace anonrs {
namespace {

void require_same_length(const DistinctSeq& i, const DistinctSeq& j) {
  if (i.size() != j.size()) {
    raise(Errc::contract, "sequence lengths differ: " + std::to_string(i.size()) + " vs " +
                              std::to_string(j.size()));
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    raise(Errc::range, "enumeration size exceeds 64 bits");
  }
  return a * b;
}

// Restricted growth strings over `u` with exactly `blocks` blocks.
void partitions(const std::vector<int>& u, int blocks, std::vector<int>& rgs, int used,
                std::vector<SetFamily>& out) {
  const std::size_t pos = rgs.size();
  const int remaining = static_cast<int>(u.size() - pos);
  if (used + remaining < blocks) return;
  if (pos == u.size()) {
    SetFamily fam(blocks);
    for (std::size_t i = 0; i < u.size(); ++i) fam[rgs[i]].push_back(u[i]);
    out.push_back(std::move(fam));
    return;
  }
  for (int b = 0; b <= used && b < blocks; ++b) {
    rgs.push_back(b);
    partitions(u, blocks, rgs, std::max(used, b + 1), out);
    rgs.pop_back();
  }
}

}  // namespace

DistinctSeq::DistinctSeq(int n, std::vector<int> items) : n_(n), items_(std::move(items)) {
  if (n < 0) raise(Errc::contract, "negative universe size");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : items_) {
    if (v < 1 || v > n) {
      raise(Errc::contract, "index " + std::to_string(v) + " outside [1.." + std::to_string(n) + "]");
    }
    if (seen[v]) raise(Errc::contract, "index " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

bool equal_as_sets(const DistinctSeq& i, const DistinctSeq& j) {
  require_same_length(i, j);
  std::vector<int> a(i.items().begin(), i.items().end());
  std::vector<int> b(j.items().begin(), j.items().end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Decomposition decompose(const DistinctSeq& i, const DistinctSeq& j) {
  require_same_length(i, j);
  const int s = static_cast<int>(i.size());
  const int n = std::max(i.n(), j.n());
  std::vector<int> where_in_j(static_cast<std::size_t>(n) + 1, 0);
  for (int b = 1; b <= s; ++b) where_in_j[j.at(b)] = b;

  // sigma(a) = position of I_a inside J; 0 when absent.
  std::vector<int> sigma(s + 1, 0);
  for (int a = 1; a <= s; ++a) {
    const int v = i.at(a);
    if (v <= n) sigma[a] = where_in_j[v];
  }

  Decomposition d;
  std::vector<char> state(s + 1, 0);  // 0 unvisited, 1 on current walk, 2 done
  std::vector<char> on_cycle(s + 1, 0);
  for (int start = 1; start <= s; ++start) {
    if (state[start] != 0) continue;
    std::vector<int> walk;
    int a = start;
    while (a != 0 && state[a] == 0) {
      state[a] = 1;
      walk.push_back(a);
      a = sigma[a];
    }
    if (a != 0 && state[a] == 1) {
      std::vector<int> cycle;
      int b = a;
      do {
        cycle.push_back(b);
        on_cycle[b] = 1;
        b = sigma[b];
      } while (b != a);
      std::sort(cycle.begin(), cycle.end());
      d.cycles.push_back(std::move(cycle));
    }
    for (int w : walk) state[w] = 2;
  }
  std::sort(d.cycles.begin(), d.cycles.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (int a = 1; a <= s; ++a) {
    if (!on_cycle[a]) d.residual.push_back(a);
  }
  return d;
}

bool is_free_of_equalities(const DistinctSeq& i, const DistinctSeq& j) {
  return decompose(i, j).cycles.empty();
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) raise(Errc::range, "binomial exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

std::vector<int> unrank_combination(int n, int r, std::uint64_t rank) {
  std::vector<int> out;
  out.reserve(r);
  int next = 1;
  for (int slot = 0; slot < r; ++slot) {
    for (;; ++next) {
      const std::uint64_t with_next = binomial(n - next, r - slot - 1);
      if (rank < with_next) break;
      rank -= with_next;
    }
    out.push_back(next++);
  }
  return out;
}

std::vector<int> unrank_permutation(std::vector<int> items, std::uint64_t rank) {
  std::vector<int> out;
  out.reserve(items.size());
  while (!items.empty()) {
    const std::uint64_t block = factorial(static_cast<int>(items.size()) - 1);
    const std::size_t pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(items[pick]);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

PairRepSpace::PairRepSpace(int n, int k) : n_(n), k_(k), s_(2 * k - 1) {
  if (k < 1 || s_ > n) {
    raise(Errc::contract, "need k >= 1 and 2k-1 <= n (n=" + std::to_string(n) +
                              ", k=" + std::to_string(k) + ")");
  }
  subsets_ = binomial(n, s_);
  arrangements_ = factorial(s_);
  size_ = checked_mul(checked_mul(subsets_, subsets_), arrangements_);
}

std::pair<DistinctSeq, DistinctSeq> PairRepSpace::at(std::uint64_t index) const {
  if (index >= size_) raise(Errc::range, "pair index out of range");
  const std::uint64_t c = index % arrangements_;
  const std::uint64_t ab = index / arrangements_;
  const std::uint64_t b = ab % subsets_;
  const std::uint64_t a = ab / subsets_;
  return {DistinctSeq(n_, unrank_combination(n_, s_, a)),
          DistinctSeq(n_, unrank_permutation(unrank_combination(n_, s_, b), c))};
}

std::vector<SetFamily> enumerate_disjoint_families(int n, int k, int count) {
  const int budget = 2 * k - 1;
  if (k < 1 || count < 1 || count > budget || budget > n) {
    raise(Errc::contract, "infeasible family parameters (n=" + std::to_string(n) + ", k=" +
                              std::to_string(k) + ", count=" + std::to_string(count) + ")");
  }
  std::vector<SetFamily> out;
  for (int size = count; size <= budget; ++size) {
    const std::uint64_t total = binomial(n, size);
    for (std::uint64_t r = 0; r < total; ++r) {
      const std::vector<int> u = unrank_combination(n, size, r);
      std::vector<int> rgs;
      partitions(u, count, rgs, 0, out);
    }
  }
  return out;
}

}  // namespace anonrs
