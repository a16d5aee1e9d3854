#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace anonrs {

// Ordered tuple of pairwise-distinct indices from [1..n].
class DistinctSeq {
 public:
  DistinctSeq(int n, std::vector<int> items);

  int n() const { return n_; }
  std::size_t size() const { return items_.size(); }
  std::span<const int> items() const { return items_; }
  // 1-based, like the positions it models.
  int at(std::size_t pos) const { return items_[pos - 1]; }

  friend bool operator==(const DistinctSeq&, const DistinctSeq&) = default;

 private:
  int n_;
  std::vector<int> items_;
};

// Position sets are sorted and 1-based.
struct Decomposition {
  std::vector<std::vector<int>> cycles;  // ordered by smallest position
  std::vector<int> residual;
};

bool equal_as_sets(const DistinctSeq& i, const DistinctSeq& j);
Decomposition decompose(const DistinctSeq& i, const DistinctSeq& j);
bool is_free_of_equalities(const DistinctSeq& i, const DistinctSeq& j);

std::uint64_t binomial(int n, int r);
std::uint64_t factorial(int n);

// Lex-order r-subset of [1..n] with the given rank.
std::vector<int> unrank_combination(int n, int r, std::uint64_t rank);
// Lehmer-code permutation of items with the given rank in [0, items.size()!).
std::vector<int> unrank_permutation(std::vector<int> items, std::uint64_t rank);

// One pair per class of (I, J) under simultaneous reordering, |I| = |J| =
// 2k-1: I increasing, J any arrangement of any (2k-1)-subset. Random access
// so scans can be split into index ranges.
class PairRepSpace {
 public:
  PairRepSpace(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t size() const { return size_; }
  std::pair<DistinctSeq, DistinctSeq> at(std::uint64_t index) const;

 private:
  int n_;
  int k_;
  int s_;
  std::uint64_t subsets_;
  std::uint64_t arrangements_;
  std::uint64_t size_;
};

inline PairRepSpace enumerate_pair_reps(int n, int k) { return PairRepSpace(n, k); }

// Family of pairwise-disjoint nonempty subsets of [1..n]; each set sorted,
// sets ordered by their smallest member.
using SetFamily = std::vector<std::vector<int>>;

// Every unordered family of `count` disjoint nonempty subsets with total size
// at most 2k-1, by union (size, then lex) and then by set partition.
std::vector<SetFamily> enumerate_disjoint_families(int n, int k, int count);

}  // namespace anonrs
