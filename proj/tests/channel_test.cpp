#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "anonrs/anonshare.hpp"
#include "anonrs/channel.hpp"
#include "anonrs/construct.hpp"
#include "anonrs/error.hpp"
#include "anonrs/oracle.hpp"
#include "anonrs/rng.hpp"

namespace anonrs {
namespace {

std::vector<int> random_word(Rng& rng, std::size_t max_len, int alphabet) {
  std::vector<int> w(rng.below(max_len + 1));
  for (auto& v : w) v = static_cast<int>(rng.below(alphabet));
  return w;
}

// Insert/delete-only edit distance computed directly.
std::size_t indel_dp(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<std::vector<std::size_t>> d(x.size() + 1, std::vector<std::size_t>(y.size() + 1));
  for (std::size_t i = 0; i <= x.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= y.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      d[i][j] = std::min(d[i - 1][j], d[i][j - 1]) + 1;
      if (x[i - 1] == y[j - 1]) d[i][j] = std::min(d[i][j], d[i - 1][j - 1]);
    }
  }
  return d[x.size()][y.size()];
}

const Scheme& certified_scheme() {
  static const Scheme s = [] {
    SearchOptions o;
    o.seed = 1;
    return random_search(7, 2, o).scheme;
  }();
  return s;
}

Polynomial random_poly(const Field& f, int k, Rng& rng) {
  std::vector<Element> c;
  for (int i = 0; i < k; ++i) c.push_back(f.random(rng));
  return Polynomial(f, c);
}

TEST(EncodeTest, Basics) {
  const Scheme& s = certified_scheme();
  for (const auto& e : rs_encode(Polynomial(s.field), s)) EXPECT_TRUE(e.is_zero());
  const Element five = s.field.from_int(5);
  for (const auto& e : rs_encode(Polynomial(s.field, {five}), s)) EXPECT_EQ(e, five);
  Rng rng(1);
  const Polynomial f = random_poly(s.field, 2, rng);
  const Word c = rs_encode(f, s);
  for (int i = 0; i < s.n; ++i) EXPECT_EQ(c[i], poly_eval(f, s.alpha[i]));
  EXPECT_THROW(rs_encode(random_poly(s.field, 3, rng) * Polynomial(s.field, {s.field.zero(), s.field.one()}), s),
               Error);
}

TEST(MetricTest, LcsBasics) {
  const std::vector<int> x{1, 2, 3, 2, 1};
  EXPECT_EQ(lcs(x, x), x.size());
  EXPECT_EQ(lcs(x, std::vector<int>{}), 0u);
  EXPECT_EQ(lcs(x, std::vector<int>{2, 2}), 2u);
  EXPECT_EQ(edit_distance(x, x), 0u);
  EXPECT_EQ(edit_distance(x, std::vector<int>{}), x.size());
}

TEST(MetricTest, EditDistanceMatchesIndelDp) {
  Rng rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = random_word(rng, 12, 4), y = random_word(rng, 12, 4);
    EXPECT_EQ(edit_distance(x, y), indel_dp(x, y));
    EXPECT_EQ(lcs(x, y), lcs(y, x));
  }
}

TEST(MetricTest, LcsMatchesNaiveRecursion) {
  Rng rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = random_word(rng, 10, 3), y = random_word(rng, 10, 3);
    EXPECT_EQ(lcs(x, y), oracle::oracle_lcs(x, y));
  }
}

TEST(MetricTest, HistogramDistanceIsBestReordering) {
  EXPECT_EQ(histogram_distance(std::vector<int>{1, 2, 3}, std::vector<int>{3, 1, 2}), 0u);
  EXPECT_EQ(histogram_distance(std::vector<int>{1, 2}, std::vector<int>{3, 4, 5}), 5u);
  Rng rng(4);
  for (int trial = 0; trial < 400; ++trial) {
    auto x = random_word(rng, 6, 3);
    const auto y = random_word(rng, 7, 3);
    std::sort(x.begin(), x.end());
    std::size_t best = SIZE_MAX;
    do {
      best = std::min(best, edit_distance(x, y));
    } while (std::next_permutation(x.begin(), x.end()));
    EXPECT_EQ(histogram_distance(x, y), best);
  }
}

TEST(AdversaryTest, IdentityAndBookkeeping) {
  const Scheme& s = certified_scheme();
  Rng rng(5);
  const Word c = rs_encode(random_poly(s.field, 2, rng), s);
  ChannelAction id;
  for (std::size_t i = 1; i <= c.size(); ++i) id.perm.push_back(i);
  EXPECT_EQ(apply_adversary(c, id), c);

  ChannelAction cut = id;
  for (int i = 0; i < 4; ++i) cut.ops.push_back(ChannelOp{ChannelOp::Kind::del, 1, std::nullopt});
  EXPECT_EQ(apply_adversary(c, cut).size(), 3u);
  EXPECT_THROW(apply_adversary(c, cut, 3), Error);

  ChannelAction bad = id;
  bad.ops.push_back(ChannelOp{ChannelOp::Kind::del, 8, std::nullopt});
  EXPECT_THROW(apply_adversary(c, bad), Error);
  bad.perm[0] = 2;
  bad.ops.clear();
  EXPECT_THROW(apply_adversary(c, bad), Error);
}

TEST(AdversaryTest, RandomActionsReplay) {
  const Scheme& s = certified_scheme();
  Rng rng(6);
  const Word c = rs_encode(random_poly(s.field, 2, rng), s);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto [w, action] = apply_random_adversary(c, s.field, 4, seed);
    EXPECT_LE(action.ops.size(), 4u);
    EXPECT_EQ(apply_adversary(c, action), w);
    EXPECT_EQ(apply_random_adversary(c, s.field, 4, seed).first, w);
    const ChannelAction back = parse_action(format_action(action, s.field), s.field);
    EXPECT_EQ(apply_adversary(c, back), w);
    EXPECT_EQ(format_action(back, s.field), format_action(action, s.field));
  }
}

TEST(DecodeTest, PermutationOnly) {
  const Scheme& s = certified_scheme();
  Rng rng(7);
  const Polynomial f = random_poly(s.field, 2, rng);
  Word c = rs_encode(f, s);
  std::reverse(c.begin(), c.end());
  EXPECT_EQ(decode_insdel(c, s, 0), f);
}

TEST(DecodeTest, DeletionOnlyAgreesWithRecon) {
  const Scheme& s = certified_scheme();
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial f = random_poly(s.field, 2, rng);
    Word c = rs_encode(f, s);
    for (std::size_t i = c.size(); i > 1; --i) std::swap(c[i - 1], c[rng.below(i)]);
    c.erase(c.begin() + 3, c.end());
    EXPECT_EQ(decode_insdel(c, s, 4), f);
    EXPECT_EQ(recon(s, c), f.coeff(0));
  }
}

TEST(DecodeTest, RandomAttacksWithinBudget) {
  const Scheme& s = certified_scheme();
  Rng rng(9);
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    const Polynomial f = random_poly(s.field, 2, rng);
    const auto [w, action] = apply_random_adversary(rs_encode(f, s), s.field, 4, trial);
    EXPECT_EQ(decode_insdel(w, s, 4), f) << format_action(action, s.field);
  }
}

TEST(DecodeTest, Errors) {
  const Scheme& s = certified_scheme();
  Rng rng(10);
  const Word c = rs_encode(random_poly(s.field, 2, rng), s);
  try {
    (void)decode_insdel(Word(c.begin(), c.begin() + 2), s, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::undecodable);
  }
  Word junk;
  for (int i = 0; i < 7; ++i) junk.push_back(s.field.random(rng));
  try {
    (void)decode_insdel(junk, s, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::undecodable);
  }
  EXPECT_THROW(decode_insdel(c, s, 5), Error);
}

TEST(DecodeTest, NonRobustPointsAreFlagged) {
  const Field f = Field::prime(11);
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Element> alpha;
    while (alpha.size() < 4) {
      const Element a = f.random_nonzero(rng);
      if (std::find(alpha.begin(), alpha.end(), a) == alpha.end()) alpha.push_back(a);
    }
    const Scheme s{4, 2, f, alpha, Certification::none};
    const auto verdict = oracle::oracle_robust(s, 1);
    if (verdict.robust) continue;
    const auto& w = *verdict.witness;
    const Word cf = rs_encode(w.f, s);
    Word received;
    for (int p : w.i) received.push_back(cf[p - 1]);
    try {
      (void)decode_insdel(received, s, 1);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::robustness_violated);
    }
    return;
  }
  FAIL() << "no non-robust instance found";
}

}  // namespace
}  // namespace anonrs
