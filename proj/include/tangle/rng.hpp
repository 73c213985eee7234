#pragma once

#include <cstdint>
#include <random>

#include "tangle/numeric.hpp"

namespace tangle {

/// Seeded source of uniform integers.
///
/// The engine is std::mt19937_64 seeded with splitmix64(seed), and bounded
/// draws use rejection sampling on raw 64-bit words, so a sequence depends
/// only on the seed and never on the standard library's distribution
/// implementation. `split(stream)` derives an independent generator; callers
/// that shard work give each shard its own split instead of sharing one Rng.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next();

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  /// Uniform in [0, bound) for an arbitrary-precision bound.
  ExactCount uniform(const ExactCount& bound);

  bool coin() { return (next() >> 63) != 0; }

  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace tangle
