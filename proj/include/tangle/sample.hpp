#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tangle/numeric.hpp"
#include "tangle/partition.hpp"
#include "tangle/perm.hpp"
#include "tangle/rng.hpp"
#include "tangle/tree.hpp"

namespace tangle {

inline constexpr std::uint32_t kDefaultCanonicalCap = 8;

/// Left leaf i is matched with right leaf matching(i), leaves labeled in
/// DFS order. (left, m, right) and (left, b m a, right) are the same
/// tanglegram for every a in A(left) and b in A(right).
struct Tanglegram {
  CanonicalTree left;
  CanonicalTree right;
  Permutation matching;

  std::uint32_t size() const { return left.leaf_count(); }
  bool operator==(const Tanglegram&) const = default;
};

/// trees[i] leaf x is matched with trees[i + 1] leaf matchings[i](x).
/// Relabeling every tree by some t_i in A(trees[i]) sends matchings[i] to
/// t_{i+1} matchings[i] t_i^{-1} and gives the same chain.
struct TangledChain {
  std::vector<CanonicalTree> trees;
  std::vector<Permutation> matchings;

  bool operator==(const TangledChain&) const = default;
};

/// Uniform element of A(t): recursive on the subtrees, composing with the
/// tree flip with probability 1/2 when both subtrees are equal.
Permutation random_automorphism(const CanonicalTree& t, Rng& rng);

/// Uniform samplers for trees, tanglegrams and tangled chains.
///
/// The sampler memoizes suffix products and the exact split weights of every
/// cycle type it has visited, so reuse one instance for a batch of draws. It
/// is not synchronized; each thread owns its own Sampler and Rng.
class Sampler {
 public:
  /// A tree T and w in A(T) of cycle type lambda, drawn with probability
  /// 1 / (|A(T)| q_lambda). Throws std::invalid_argument for empty lambda.
  std::pair<CanonicalTree, Permutation> random_tree_and_perm(
      const BinaryPartition& lambda, Rng& rng);

  /// Cycle type lambda of n with probability z_lambda^{k-1} q_lambda^k / t(k, n).
  BinaryPartition random_cycle_type(unsigned k, std::uint32_t n, Rng& rng);

  Tanglegram random_tanglegram(std::uint32_t n, Rng& rng);
  CanonicalTree random_tree(std::uint32_t n, Rng& rng);
  TangledChain random_chain(unsigned k, std::uint32_t n, Rng& rng);

 private:
  struct Option {
    BinaryPartition first;
    BinaryPartition second;
    bool halved = false;
  };
  struct Table {
    std::vector<Option> options;
    std::vector<ExactCount> cumulative;
  };

  const ExactCount& suffix_product_of(const BinaryPartition& lambda);
  const Table& split_table(const BinaryPartition& lambda);
  const Table& cycle_type_table_for(unsigned k, std::uint32_t n);
  static std::size_t pick(const Table& table, Rng& rng);

  std::map<BinaryPartition, ExactCount> suffix_cache_;
  std::map<BinaryPartition, Table> split_cache_;
  std::map<std::pair<unsigned, std::uint32_t>, Table> top_cache_;
};

Tanglegram random_tanglegram(std::uint32_t n, Rng& rng);
CanonicalTree random_tree(std::uint32_t n, Rng& rng);
TangledChain random_chain(unsigned k, std::uint32_t n, Rng& rng);
std::pair<CanonicalTree, Permutation> random_tree_and_perm(
    const BinaryPartition& lambda, Rng& rng);

/// The same tanglegram with the lexicographically least matching in its
/// double coset, found by enumerating both automorphism groups. Two
/// tanglegrams are equal iff their canonical_rep values are identical.
/// Throws CapExceeded when the size exceeds `cap`.
Tanglegram canonical_rep(const Tanglegram& t,
                         std::uint32_t cap = kDefaultCanonicalCap);

/// Chain analogue of canonical_rep: the least tuple of matchings over the
/// action of A(trees[0]) x ... x A(trees[k-1]).
TangledChain canonical_rep(const TangledChain& c,
                           std::uint32_t cap = kDefaultCanonicalCap);

struct OccurrenceSummary {
  CanonicalTree pattern;
  std::uint32_t n = 0;
  std::uint64_t samples = 0;
  double mean = 0;
  double variance = 0;  // unbiased sample variance
  std::map<std::uint64_t, std::uint64_t> histogram;
  /// 2^{-(l + k - 1)} n with l leaves and k symmetric vertices in pattern.
  double conjectured_mean = 0;
};

/// Copies of `pattern` in the left tree of `samples` uniform tanglegrams.
OccurrenceSummary pattern_statistics(const CanonicalTree& pattern,
                                     std::uint32_t n, std::uint64_t samples,
                                     Rng& rng);

/// pattern_statistics with the cherry as pattern.
OccurrenceSummary cherry_statistics(std::uint32_t n, std::uint64_t samples,
                                    Rng& rng);

nlohmann::ordered_json to_json(const Tanglegram& t);
nlohmann::ordered_json to_json(const TangledChain& c);
nlohmann::ordered_json to_json(const OccurrenceSummary& s);

}  // namespace tangle
