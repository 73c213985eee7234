#include "tangle/partition.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace tangle {

BinaryPartition BinaryPartition::from_parts(
    std::span<const std::uint64_t> parts) {
  BinaryPartition out;
  for (std::uint64_t p : parts) {
    if (p == 0 || !std::has_single_bit(p)) {
      throw std::invalid_argument("binary partition part " + std::to_string(p) +
                                  " is not a power of 2");
    }
    const auto level = static_cast<std::size_t>(std::countr_zero(p));
    if (out.mult_.size() <= level) out.mult_.resize(level + 1, 0);
    ++out.mult_[level];
  }
  out.normalize();
  return out;
}

BinaryPartition BinaryPartition::from_parts(
    std::initializer_list<std::uint64_t> parts) {
  return from_parts(std::span<const std::uint64_t>(parts.begin(), parts.size()));
}

BinaryPartition BinaryPartition::from_multiplicities(
    std::vector<std::uint32_t> mult) {
  BinaryPartition out;
  out.mult_ = std::move(mult);
  out.normalize();
  return out;
}

void BinaryPartition::normalize() {
  while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
  size_ = 0;
  length_ = 0;
  for (std::size_t h = 0; h < mult_.size(); ++h) {
    size_ += static_cast<std::uint64_t>(mult_[h]) << h;
    length_ += mult_[h];
  }
}

std::vector<std::uint64_t> BinaryPartition::parts() const {
  std::vector<std::uint64_t> out;
  out.reserve(length_);
  for (std::size_t h = mult_.size(); h-- > 0;) {
    out.insert(out.end(), mult_[h], std::uint64_t{1} << h);
  }
  return out;
}

BinaryPartition BinaryPartition::operator+(const BinaryPartition& other) const {
  std::vector<std::uint32_t> m(std::max(mult_.size(), other.mult_.size()), 0);
  for (std::size_t h = 0; h < m.size(); ++h) {
    m[h] = multiplicity(h) + other.multiplicity(h);
  }
  return from_multiplicities(std::move(m));
}

BinaryPartition BinaryPartition::operator-(const BinaryPartition& other) const {
  std::vector<std::uint32_t> m = mult_;
  for (std::size_t h = 0; h < other.mult_.size(); ++h) {
    if (other.mult_[h] > multiplicity(h)) {
      throw std::invalid_argument(other.to_string() + " is not contained in " +
                                  to_string());
    }
    m[h] -= other.mult_[h];
  }
  return from_multiplicities(std::move(m));
}

BinaryPartition BinaryPartition::doubled() const {
  if (empty()) return {};
  std::vector<std::uint32_t> m(mult_.size() + 1, 0);
  std::copy(mult_.begin(), mult_.end(), m.begin() + 1);
  return from_multiplicities(std::move(m));
}

std::strong_ordering BinaryPartition::operator<=>(
    const BinaryPartition& other) const {
  // The first difference in the decreasing part sequences sits at the
  // highest level whose multiplicities differ; more copies there is larger.
  const std::size_t top = std::max(mult_.size(), other.mult_.size());
  for (std::size_t h = top; h-- > 0;) {
    const auto a = multiplicity(h);
    const auto b = other.multiplicity(h);
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::string BinaryPartition::to_string() const {
  std::string out = "(";
  bool first = true;
  for (std::uint64_t p : parts()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + ")";
}

BinaryPartition HalfPartition::partition() const {
  if (degenerate()) {
    throw std::domain_error("half of " + source_.to_string() +
                            " has a part equal to 1/2");
  }
  const auto& m = source_.multiplicities();
  if (m.empty()) return {};
  return BinaryPartition::from_multiplicities(
      std::vector<std::uint32_t>(m.begin() + 1, m.end()));
}

namespace {

// Appends every binary partition of `remaining` with parts <= 2^level, in
// decreasing lexicographic order, to `out`. `mult` holds the prefix already
// chosen for the levels above.
void enumerate_from(std::uint64_t remaining, std::size_t level,
                    std::vector<std::uint32_t>& mult,
                    std::vector<BinaryPartition>& out) {
  if (level == 0) {
    mult[0] = static_cast<std::uint32_t>(remaining);
    out.push_back(BinaryPartition::from_multiplicities(mult));
    mult[0] = 0;
    return;
  }
  const std::uint64_t part = std::uint64_t{1} << level;
  for (std::uint64_t m = remaining / part + 1; m-- > 0;) {
    mult[level] = static_cast<std::uint32_t>(m);
    enumerate_from(remaining - m * part, level - 1, mult, out);
  }
  mult[level] = 0;
}

}  // namespace

std::vector<BinaryPartition> enumerate_binary_partitions(std::int64_t n) {
  if (n < 0) {
    throw std::invalid_argument("binary partitions of a negative integer");
  }
  if (n == 0) return {BinaryPartition{}};
  const auto un = static_cast<std::uint64_t>(n);
  const std::size_t top = static_cast<std::size_t>(std::bit_width(un)) - 1;
  std::vector<std::uint32_t> mult(top + 1, 0);
  std::vector<BinaryPartition> out;
  enumerate_from(un, top, mult, out);
  return out;
}

std::uint64_t count_binary_partitions(std::uint64_t n) {
  // b(0) = 1, b(2k+1) = b(2k), b(2k) = b(2k-1) + b(k).
  std::vector<std::uint64_t> b(n + 1, 1);
  for (std::uint64_t i = 1; i <= n; ++i) {
    b[i] = (i % 2 == 1) ? b[i - 1] : b[i - 1] + b[i / 2];
  }
  return b[n];
}

ExactCount z_of(const BinaryPartition& lambda) {
  ExactCount z = 1;
  const auto& m = lambda.multiplicities();
  for (std::size_t h = 0; h < m.size(); ++h) {
    for (std::uint32_t j = 1; j <= m[h]; ++j) {
      z *= static_cast<std::uint64_t>(j) << h;
    }
  }
  return z;
}

ExactCount suffix_product(const BinaryPartition& lambda) {
  // Walk parts from the smallest up; the largest part (i = 1) is skipped.
  ExactCount p = 1;
  std::uint64_t suffix = 0;
  std::uint64_t seen = 0;
  const auto& m = lambda.multiplicities();
  for (std::size_t h = 0; h < m.size(); ++h) {
    for (std::uint32_t j = 0; j < m[h]; ++j) {
      suffix += std::uint64_t{1} << h;
      if (++seen == lambda.length()) break;
      p *= 2 * suffix - 1;
    }
  }
  return p;
}

ExactRatio q_of(const BinaryPartition& lambda) {
  return ExactRatio(suffix_product(lambda), z_of(lambda));
}

ExactRatio q_of(const HalfPartition& half) {
  if (half.degenerate()) return ExactRatio(0);
  return q_of(half.partition());
}

HalfPartition halve(const BinaryPartition& lambda) {
  return HalfPartition(lambda);
}

ExactCount split_multiplicity(const BinaryPartition& lambda,
                              const BinaryPartition& part) {
  ExactCount out = 1;
  for (std::size_t h = 0; h < lambda.levels(); ++h) {
    out *= binomial(lambda.multiplicity(h), part.multiplicity(h));
  }
  return out;
}

std::vector<std::pair<BinaryPartition, BinaryPartition>> split_pairs(
    const BinaryPartition& lambda) {
  const auto& m = lambda.multiplicities();
  std::vector<std::uint32_t> pick(m.size(), 0);
  std::vector<std::pair<BinaryPartition, BinaryPartition>> out;
  while (true) {
    auto first = BinaryPartition::from_multiplicities(pick);
    std::vector<std::uint32_t> rest(m.size());
    for (std::size_t h = 0; h < m.size(); ++h) rest[h] = m[h] - pick[h];
    out.emplace_back(std::move(first),
                     BinaryPartition::from_multiplicities(std::move(rest)));
    std::size_t h = 0;
    while (h < m.size() && pick[h] == m[h]) pick[h++] = 0;
    if (h == m.size()) break;
    ++pick[h];
  }
  return out;
}

}  // namespace tangle
