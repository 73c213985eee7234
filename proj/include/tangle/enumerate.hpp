#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "tangle/numeric.hpp"
#include "tangle/partition.hpp"
#include "tangle/tree.hpp"

namespace tangle {

/// t_n: the number of tanglegrams of size n, summed over binary partitions.
ExactCount tanglegram_count(std::uint64_t n);

/// b_n: the number of inequivalent binary trees with n leaves, summed over
/// binary partitions.
ExactCount tree_count(std::uint64_t n);

/// t(k, n): the number of tangled chains of k trees with n leaves each.
/// k = 1 gives b_n and k = 2 gives t_n.
ExactCount chain_count(unsigned k, std::uint64_t n);

/// sum over binary partitions lambda of n of
/// prod_{i=2}^{l} (2 (lambda_i + ... + lambda_l) - 1)^k / z_lambda,
/// asserted to be an integer. The three counts above are this with k = 1, 2
/// and the chain length.
ExactCount partition_sum(unsigned k, std::uint64_t n);

/// Tanglegrams with left tree t and right tree s, from the cycle-type
/// tables of both automorphism groups. Throws std::invalid_argument when the
/// leaf counts differ.
ExactCount double_coset_count(const CanonicalTree& t, const CanonicalTree& s);

/// Memo table for the level recurrence r^k(h, n, s). Not synchronized: give
/// each thread its own cache.
class CountCache {
 public:
  /// r^k(h, n, s) with r^k(h, 0, s) = 1.
  ExactRatio r(unsigned k, std::uint32_t h, std::uint64_t n, std::uint64_t s);

  std::size_t size() const { return memo_.size(); }

 private:
  std::map<std::tuple<unsigned, std::uint32_t, std::uint64_t, std::uint64_t>,
           ExactRatio>
      memo_;
};

/// c^k(h, m, s) = prod_{j=1}^{m} (2 (s + j 2^h) - 1)^k / (j 2^h).
ExactRatio level_factor(unsigned k, std::uint32_t h, std::uint64_t m,
                        std::uint64_t s);

/// t_n = r^2(0, n, 0) / (2n - 1)^2.
ExactCount tanglegram_count_rec(std::uint64_t n);
ExactCount tanglegram_count_rec(std::uint64_t n, CountCache& cache);

/// t(k, n) = r^k(0, n, 0) / (2n - 1)^k.
ExactCount chain_count_rec(unsigned k, std::uint64_t n);
ExactCount chain_count_rec(unsigned k, std::uint64_t n, CountCache& cache);

/// The summand of the mu-form for one mu (parts >= 2, |mu| <= n):
/// n (n-1) ... (n-|mu|+1) divided by z_mu times the squared odd factors
/// that mu removes from (2n-3)!!. The empty mu gives 1.
ExactRatio mu_summand(std::uint64_t n, const BinaryPartition& mu);

/// t_n = c_{n-1}^2 n! / 4^{n-1} * sum over mu of mu_summand(n, mu).
/// Requires n >= 2.
ExactCount tanglegram_count_mu(std::uint64_t n);

/// b_1..b_n from B(x) = x + (B(x)^2 + B(x^2)) / 2; index 0 is unused (0).
std::vector<ExactCount> tree_counts_oracle(std::uint64_t n);
ExactCount tree_count_oracle(std::uint64_t n);

/// r_S(x) = prod_{t=2}^{k} (x_{i_t} + ... + x_{i_k} - 1) for
/// S = {i_1 < ... < i_k} (1-indexed into x). Singletons give 1.
ExactRatio r_poly(std::span<const std::uint32_t> subset,
                  std::span<const ExactRatio> x);

}  // namespace tangle
