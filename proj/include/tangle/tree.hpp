#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/numeric.hpp"
#include "tangle/partition.hpp"
#include "tangle/perm.hpp"

namespace tangle {

inline constexpr std::uint32_t kDefaultTreeCap = 20;

/// An inequivalent binary rooted tree in canonical form: at every internal
/// vertex the left subtree is >= the right subtree under `compare`.
///
/// Leaves are labeled 1..n in depth-first order visiting the left subtree
/// first, so the left subtree of a tree with k leaves in its left subtree
/// owns labels [1, k] and the right subtree owns [k + 1, n]. Every
/// permutation in this library that acts on a tree uses this labeling.
///
/// Values are immutable and share structure; copying is cheap.
class CanonicalTree {
 public:
  /// The single-vertex tree.
  CanonicalTree();

  static CanonicalTree leaf() { return CanonicalTree(); }
  /// Throws std::invalid_argument when left < right (non-canonical).
  static CanonicalTree node(const CanonicalTree& left,
                            const CanonicalTree& right);
  /// node() with the arguments ordered so the larger one goes left.
  static CanonicalTree join(const CanonicalTree& a, const CanonicalTree& b);

  /// Parses "." for a leaf and "(" left right ")" for a node. Throws
  /// std::invalid_argument on malformed or non-canonical input.
  static CanonicalTree parse(std::string_view text);

  bool is_leaf() const { return rep_->left == nullptr; }
  std::uint32_t leaf_count() const { return rep_->leaves; }
  /// Precondition: !is_leaf().
  CanonicalTree left() const { return CanonicalTree(rep_->left); }
  CanonicalTree right() const { return CanonicalTree(rep_->right); }

  std::string to_string() const;

  friend std::strong_ordering compare(const CanonicalTree& a,
                                      const CanonicalTree& b);
  friend std::strong_ordering operator<=>(const CanonicalTree& a,
                                          const CanonicalTree& b) {
    return compare(a, b);
  }
  friend bool operator==(const CanonicalTree& a, const CanonicalTree& b) {
    return compare(a, b) == 0;
  }

 private:
  struct Rep {
    std::shared_ptr<const Rep> left;
    std::shared_ptr<const Rep> right;
    std::uint32_t leaves = 1;
  };

  explicit CanonicalTree(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  static std::strong_ordering compare_rep(const Rep* a, const Rep* b);
  static void write(const Rep* r, std::string& out);

  std::shared_ptr<const Rep> rep_;
};

/// Linear order on trees: more leaves is larger; ties go to the
/// (left, right) pair compared lexicographically. Equal iff isomorphic.
std::strong_ordering compare(const CanonicalTree& a, const CanonicalTree& b);

/// B_n in decreasing order. Throws CapExceeded when n > cap.
std::vector<CanonicalTree> enumerate_trees(std::uint32_t n,
                                           std::uint32_t cap = kDefaultTreeCap);

/// The caterpillar with n leaves: the unique tree with a single cherry
/// (for n >= 2).
CanonicalTree caterpillar(std::uint32_t n);
/// The complete balanced tree with 2^depth leaves.
CanonicalTree complete_tree(std::uint32_t depth);

/// |A(T)| by the direct/wreath product recursion.
ExactCount aut_size(const CanonicalTree& t);

/// |A(T)_lambda| for every cycle type lambda that occurs, plus |A(T)|.
struct CycleTypeTable {
  std::map<BinaryPartition, ExactCount> counts;
  ExactCount total;

  /// 0 for cycle types that do not occur.
  ExactCount operator[](const BinaryPartition& lambda) const;
};

CycleTypeTable cycle_type_table(const CanonicalTree& t);

/// Every element of A(T) as a permutation of the DFS leaf labels, built
/// recursively from the subtrees' groups and the tree flip. Throws
/// CapExceeded when the leaf count exceeds `cap`.
std::vector<Permutation> automorphisms(const CanonicalTree& t,
                                       std::uint32_t cap = 12);

/// Internal vertices whose two children are both leaves.
std::uint64_t cherries(const CanonicalTree& t);

/// Vertices of t whose full subtree is isomorphic to pattern.
std::uint64_t count_occurrences(const CanonicalTree& pattern,
                                const CanonicalTree& t);

/// Internal vertices whose two child subtrees are isomorphic.
std::uint64_t symmetry_count(const CanonicalTree& t);

}  // namespace tangle
