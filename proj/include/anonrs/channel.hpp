#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anonrs/field.hpp"
#include "anonrs/polynomial.hpp"
#include "anonrs/scheme.hpp"

namespace anonrs {

using Word = std::vector<Element>;

// (f(alpha_1), ..., f(alpha_n)); throws contract when deg f >= k.
Word rs_encode(const Polynomial& f, const Scheme& scheme);

template <typename T>
std::size_t lcs(const std::vector<T>& x, const std::vector<T>& y) {
  std::vector<std::size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

// Insertions plus deletions turning x into y.
template <typename T>
std::size_t edit_distance(const std::vector<T>& x, const std::vector<T>& y) {
  return x.size() + y.size() - 2 * lcs(x, y);
}

// L1 distance between value histograms; the edit distance after the best
// reordering of x.
template <typename T>
std::size_t histogram_distance(std::vector<T> x, std::vector<T> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::size_t common = 0;
  for (std::size_t i = 0, j = 0; i < x.size() && j < y.size();) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      ++common, ++i, ++j;
    }
  }
  return x.size() + y.size() - 2 * common;
}

struct ChannelOp {
  enum class Kind { del, ins };
  Kind kind = Kind::del;
  // 1-based. Deletion removes this position; insertion puts the value here,
  // shifting the rest right (size+1 appends).
  std::size_t pos = 1;
  std::optional<Element> value;
};

struct ChannelAction {
  std::vector<std::size_t> perm;  // output position i takes input perm[i-1]
  std::vector<ChannelOp> ops;
};

Word apply_adversary(const Word& c, const ChannelAction& action,
                     std::optional<std::size_t> budget = std::nullopt);

// Uniform permutation, then a deletions and b insertions with a uniform in
// [0, t], b uniform in [0, t-a], shuffled, uniform positions and values.
std::pair<Word, ChannelAction> apply_random_adversary(const Word& c, const Field& field,
                                                      std::size_t t_budget, std::uint64_t seed);

// "perm:3,1,2/del@2/ins@1:<element>"
std::string format_action(const ChannelAction& action, const Field& field);
ChannelAction parse_action(std::string_view text, const Field& field);

// Unique message polynomial whose codeword is within t permutation-insdel
// errors of `received`. Throws undecodable when none is, and
// robustness_violated when more than one is.
Polynomial decode_insdel(const Word& received, const Scheme& scheme, std::size_t t);

}  // namespace anonrs
