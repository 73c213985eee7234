#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tangle/numeric.hpp"

namespace tangle {

/// A partition whose parts are all powers of two, stored by multiplicity:
/// multiplicity(h) is the number of parts equal to 2^h. The multiplicity
/// vector never has trailing zeros, so equal partitions compare equal.
class BinaryPartition {
 public:
  /// The empty partition.
  BinaryPartition() = default;

  /// Throws std::invalid_argument unless every part is a power of two.
  /// Parts may be given in any order.
  static BinaryPartition from_parts(std::span<const std::uint64_t> parts);
  static BinaryPartition from_parts(std::initializer_list<std::uint64_t> parts);
  static BinaryPartition from_multiplicities(std::vector<std::uint32_t> mult);

  /// Weakly decreasing part sequence.
  std::vector<std::uint64_t> parts() const;
  const std::vector<std::uint32_t>& multiplicities() const { return mult_; }
  std::uint32_t multiplicity(std::size_t level) const {
    return level < mult_.size() ? mult_[level] : 0;
  }
  /// Number of distinct levels, i.e. one past the level of the largest part.
  std::size_t levels() const { return mult_.size(); }

  std::uint64_t size() const { return size_; }
  std::uint64_t length() const { return length_; }
  bool empty() const { return length_ == 0; }

  /// Multiset union.
  BinaryPartition operator+(const BinaryPartition& other) const;
  /// Multiset difference; `other` must be a sub-multiset.
  BinaryPartition operator-(const BinaryPartition& other) const;
  /// Every part doubled (2 * lambda).
  BinaryPartition doubled() const;

  bool operator==(const BinaryPartition&) const = default;
  /// Lexicographic order on the decreasing part sequences.
  std::strong_ordering operator<=>(const BinaryPartition& other) const;

  /// "(4,2,2)"; the empty partition prints as "()".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<std::uint32_t> mult_;
  std::uint64_t size_ = 0;
  std::uint64_t length_ = 0;
};

/// lambda / 2, kept as the undivided partition plus a halved flag. It is
/// degenerate when lambda has a part equal to 1 (a half part would appear).
class HalfPartition {
 public:
  explicit HalfPartition(BinaryPartition source) : source_(std::move(source)) {}

  const BinaryPartition& source() const { return source_; }
  bool degenerate() const { return source_.multiplicity(0) > 0; }
  /// The halved partition. Throws std::domain_error when degenerate.
  BinaryPartition partition() const;

 private:
  BinaryPartition source_;
};

/// All binary partitions of n in decreasing lexicographic order. n = 0 gives
/// the single empty partition.
std::vector<BinaryPartition> enumerate_binary_partitions(std::int64_t n);

/// Number of binary partitions of n, without materializing them.
std::uint64_t count_binary_partitions(std::uint64_t n);

/// z_lambda = prod_h (2^h)^{m_h} m_h!; 1 for the empty partition.
ExactCount z_of(const BinaryPartition& lambda);

/// prod_{i=2}^{l} (2 (lambda_i + ... + lambda_l) - 1); 1 when l <= 1.
ExactCount suffix_product(const BinaryPartition& lambda);

/// suffix_product(lambda) / z_lambda.
ExactRatio q_of(const BinaryPartition& lambda);
/// 0 for a degenerate half-partition, else q_of of the halved partition.
ExactRatio q_of(const HalfPartition& half);

HalfPartition halve(const BinaryPartition& lambda);

/// prod_h binomial(m_h(lambda), m_h(part)); the number of ways the multiset
/// `part` sits inside lambda when equal parts are told apart.
ExactCount split_multiplicity(const BinaryPartition& lambda,
                              const BinaryPartition& part);

/// Every ordered pair (first, second) of sub-multisets with
/// first + second == lambda, each exactly once, including the two pairs with
/// an empty side. Order: first runs through sub-multisets with the level-0
/// multiplicity varying fastest.
std::vector<std::pair<BinaryPartition, BinaryPartition>> split_pairs(
    const BinaryPartition& lambda);

}  // namespace tangle
