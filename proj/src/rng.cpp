#include "anonrs/rng.hpp"

#include "anonrs/error.hpp"

namespace anonrs {
namespace {

std::seed_seq make_seq(std::uint64_t seed, std::uint64_t stream, bool keyed) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  if (!keyed) return std::seed_seq{lo(seed), hi(seed)};
  return std::seed_seq{lo(seed), hi(seed), lo(stream), hi(stream), 0x616e6f6eu};
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  auto seq = make_seq(seed, 0, false);
  engine_.seed(seq);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  auto seq = make_seq(seed, stream, true);
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) raise(Errc::contract, "Rng::below requires a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace anonrs
