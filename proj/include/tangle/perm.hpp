#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tangle/rng.hpp"

namespace tangle {

/// A bijection of {1..n}. Stored zero-based: `at(i)` is v(i + 1) - 1.
/// The external one-line form is 1-indexed.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);
  /// One-line notation, 1-indexed. Throws std::invalid_argument if the
  /// values are not a bijection of {1..n}.
  static Permutation from_one_line(std::span<const std::uint32_t> one_line);
  static Permutation from_one_line(std::initializer_list<std::uint32_t> one_line);
  /// Product of disjoint cycles given 1-indexed; unlisted points are fixed.
  static Permutation from_cycles(
      std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t size() const { return img_.size(); }
  std::uint32_t at(std::size_t i) const { return img_[i]; }
  std::vector<std::uint32_t> one_line() const;
  const std::vector<std::uint32_t>& zero_based() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Cycles in canonical form: each starts at its minimum element and cycles
  /// are ordered by minimum. Fixed points included. Zero-based.
  std::vector<std::vector<std::uint32_t>> cycles() const;
  /// Cycle lengths, weakly decreasing.
  std::vector<std::uint64_t> cycle_type() const;

  /// This permutation placed on [offset, offset + size()) inside {0..n-1};
  /// every other point is fixed.
  Permutation embedded(std::size_t offset, std::size_t n) const;

  /// "(1 6)(2 7)"; fixed points omitted, identity prints as "()".
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;
  /// Lexicographic on one-line notation.
  auto operator<=>(const Permutation& other) const { return img_ <=> other.img_; }

 private:
  explicit Permutation(std::vector<std::uint32_t> img) : img_(std::move(img)) {}

  std::vector<std::uint32_t> img_;
};

/// (a o b)(i) = a(b(i)). Throws std::invalid_argument on a size mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

/// The tree flip on 2k points: product of the transpositions (i, i + k).
Permutation flip(std::size_t k);

/// pi w1 pi w1^{-1} pi w2 with pi = flip(k). w1 must move only points of
/// [1, k] and w2 only points of [k + 1, 2k]. If w2 restricted to [k+1, 2k]
/// has cycle type mu, the result has cycle type 2 mu.
Permutation interleave(const Permutation& w1, const Permutation& w2,
                       std::size_t k);

/// Uniform w with u = w v w^{-1}. Throws std::invalid_argument when the cycle
/// types differ. For every cycle length c, v's c-cycles are matched to u's
/// c-cycles by a uniform bijection and each matched pair gets a uniform
/// rotation in [0, c), so each of the z_lambda conjugators has one draw.
Permutation sample_conjugator(const Permutation& u, const Permutation& v,
                              Rng& rng);

/// min over p o v o q with p in `pre`, q in `post`, lexicographic one-line.
Permutation double_coset_min(const Permutation& v,
                             std::span<const Permutation> pre,
                             std::span<const Permutation> post);

/// Lehmer rank of the permutation in [0, n!). Intended for n <= 12.
std::uint64_t rank(const Permutation& p);

/// All n! permutations of size n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace tangle
