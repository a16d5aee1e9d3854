#include "anonrs/channel.hpp"

#include <charconv>
#include <string>

#include "anonrs/anonshare.hpp"
#include "anonrs/error.hpp"
#include "anonrs/rng.hpp"
#include "anonrs/sequences.hpp"

namespace anonrs {
namespace {

std::size_t parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    raise(Errc::parse, "bad position '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Word rs_encode(const Polynomial& f, const Scheme& scheme) {
  const auto deg = f.degree();
  if (deg && *deg >= static_cast<std::size_t>(scheme.k)) {
    raise(Errc::contract, "degree " + std::to_string(*deg) + " is not below k=" + std::to_string(scheme.k));
  }
  if (!(f.field() == scheme.field)) raise(Errc::field_mismatch, "polynomial is over another field");
  Word out;
  out.reserve(scheme.alpha.size());
  for (const auto& a : scheme.alpha) out.push_back(poly_eval(f, a));
  return out;
}

Word apply_adversary(const Word& c, const ChannelAction& action, std::optional<std::size_t> budget) {
  if (action.perm.size() != c.size()) raise(Errc::contract, "permutation length differs from word length");
  std::vector<char> seen(c.size() + 1, 0);
  Word w;
  w.reserve(c.size() + action.ops.size());
  for (std::size_t src : action.perm) {
    if (src < 1 || src > c.size() || seen[src]) raise(Errc::contract, "not a permutation of [1..n]");
    seen[src] = 1;
    w.push_back(c[src - 1]);
  }
  if (budget && action.ops.size() > *budget) {
    raise(Errc::contract, std::to_string(action.ops.size()) + " operations exceed budget " +
                              std::to_string(*budget));
  }
  for (const auto& op : action.ops) {
    if (op.kind == ChannelOp::Kind::del) {
      if (op.pos < 1 || op.pos > w.size()) raise(Errc::contract, "deletion position out of range");
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(op.pos - 1));
    } else {
      if (op.pos < 1 || op.pos > w.size() + 1) raise(Errc::contract, "insertion position out of range");
      if (!op.value) raise(Errc::contract, "insertion without a value");
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(op.pos - 1), *op.value);
    }
  }
  return w;
}

std::pair<Word, ChannelAction> apply_random_adversary(const Word& c, const Field& field,
                                                      std::size_t t_budget, std::uint64_t seed) {
  if (t_budget > c.size()) raise(Errc::contract, "budget exceeds word length");
  Rng rng(seed);
  ChannelAction action;
  for (std::size_t i = 1; i <= c.size(); ++i) action.perm.push_back(i);
  for (std::size_t i = c.size(); i > 1; --i) std::swap(action.perm[i - 1], action.perm[rng.below(i)]);

  const std::size_t a = rng.below(t_budget + 1);
  const std::size_t b = rng.below(t_budget - a + 1);
  std::vector<char> kinds(a, 'd');
  kinds.resize(a + b, 'i');
  for (std::size_t i = kinds.size(); i > 1; --i) std::swap(kinds[i - 1], kinds[rng.below(i)]);

  std::size_t len = c.size();
  for (char kind : kinds) {
    ChannelOp op;
    if (kind == 'd') {
      op.kind = ChannelOp::Kind::del;
      op.pos = 1 + rng.below(len--);
    } else {
      op.kind = ChannelOp::Kind::ins;
      op.pos = 1 + rng.below(++len);
      op.value = field.random(rng);
    }
    action.ops.push_back(std::move(op));
  }
  Word w = apply_adversary(c, action, t_budget);
  return {std::move(w), std::move(action)};
}

std::string format_action(const ChannelAction& action, const Field& field) {
  std::string out = "perm:";
  for (std::size_t i = 0; i < action.perm.size(); ++i) out += (i ? "," : "") + std::to_string(action.perm[i]);
  for (const auto& op : action.ops) {
    if (op.kind == ChannelOp::Kind::del) {
      out += "/del@" + std::to_string(op.pos);
    } else {
      out += "/ins@" + std::to_string(op.pos) + ":" + field.format(*op.value);
    }
  }
  return out;
}

ChannelAction parse_action(std::string_view text, const Field& field) {
  std::vector<std::string_view> parts;
  for (;;) {
    const std::size_t slash = text.find('/');
    parts.push_back(text.substr(0, slash));
    if (slash == std::string_view::npos) break;
    text.remove_prefix(slash + 1);
  }
  if (parts[0].substr(0, 5) != "perm:") raise(Errc::parse, "action must start with 'perm:'");
  ChannelAction action;
  std::string_view perm = parts[0].substr(5);
  while (!perm.empty()) {
    const std::size_t comma = perm.find(',');
    action.perm.push_back(parse_size(perm.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    perm.remove_prefix(comma + 1);
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string_view p = parts[i];
    ChannelOp op;
    if (p.substr(0, 4) == "del@") {
      op.kind = ChannelOp::Kind::del;
      op.pos = parse_size(p.substr(4));
    } else if (p.substr(0, 4) == "ins@") {
      const std::size_t colon = p.find(':');
      if (colon == std::string_view::npos) raise(Errc::parse, "insertion without a value");
      op.kind = ChannelOp::Kind::ins;
      op.pos = parse_size(p.substr(4, colon - 4));
      op.value = field.parse(p.substr(colon + 1));
    } else {
      raise(Errc::parse, "unknown operation '" + std::string(p) + "'");
    }
    action.ops.push_back(std::move(op));
  }
  return action;
}

Polynomial decode_insdel(const Word& received, const Scheme& scheme, std::size_t t) {
  const std::size_t n = static_cast<std::size_t>(scheme.n);
  const std::size_t s = 2 * static_cast<std::size_t>(scheme.k) - 1;
  if (s > n || t > n - s) {
    raise(Errc::contract, "t=" + std::to_string(t) + " exceeds n-2k+1=" + std::to_string(n - s));
  }
  if (received.size() + t < n || received.size() > n + t) {
    raise(Errc::undecodable, "received length " + std::to_string(received.size()) +
                                 " is not within t of n=" + std::to_string(n));
  }
  std::vector<Polynomial> survivors;
  const std::uint64_t subsets = binomial(static_cast<int>(received.size()), static_cast<int>(s));
  for (std::uint64_t r = 0; r < subsets; ++r) {
    std::vector<Element> picked;
    for (int pos : unrank_combination(static_cast<int>(received.size()), static_cast<int>(s), r)) {
      picked.push_back(received[pos - 1]);
    }
    for (auto& f : recon_candidates(scheme, picked)) {
      if (histogram_distance(rs_encode(f, scheme), received) > t) continue;
      if (std::find(survivors.begin(), survivors.end(), f) == survivors.end()) survivors.push_back(std::move(f));
    }
  }
  if (survivors.empty()) raise(Errc::undecodable, "no codeword is consistent with the received word");
  if (survivors.size() > 1) {
    raise(Errc::robustness_violated, "codewords of " + survivors[0].to_string() + " and " +
                                         survivors[1].to_string() + " both explain the received word");
  }
  return std::move(survivors.front());
}

}  // namespace anonrs
