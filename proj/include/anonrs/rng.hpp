#pragma once

#include <cstdint>
#include <random>

namespace anonrs {

// Seeded 64-bit generator. Bounded draws use rejection sampling instead of
// std::uniform_int_distribution so streams are identical across standard
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  // Independent stream keyed by (seed, stream); used for per-attempt draws.
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace anonrs
