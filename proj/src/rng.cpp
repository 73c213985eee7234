#include "tangle/rng.hpp"

#include <stdexcept>

#include <gmp.h>

namespace tangle {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

std::uint64_t Rng::next() { return engine_(); }

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::uniform: empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

ExactCount Rng::uniform(const ExactCount& bound) {
  if (bound <= 0) throw std::invalid_argument("Rng::uniform: empty range");
  if (bound <= ExactCount(~std::uint64_t{0})) {
    return ExactCount(uniform(static_cast<std::uint64_t>(bound)));
  }
  const std::size_t bits = mpz_sizeinbase(bound.backend().data(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  ExactCount x;
  do {
    x = 0;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t w = next();
      if (i == 0 && top_bits < 64) w >>= (64 - top_bits);
      x <<= 64;
      x += w;
    }
  } while (x >= bound);
  return x;
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

}  // namespace tangle
