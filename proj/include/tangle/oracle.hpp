#pragma once

#include <cstdint>
#include <vector>

#include "tangle/numeric.hpp"
#include "tangle/perm.hpp"
#include "tangle/sample.hpp"
#include "tangle/tree.hpp"

// Brute-force enumeration used to check the formulas and the samplers.
// Nothing here goes through cycle-type tables or the counting formulas.

namespace tangle {

inline constexpr std::uint32_t kOracleCap = 7;
inline constexpr std::uint32_t kBruteAutomorphismCap = 8;

/// Leaf permutations that fix the edge set of t, where every vertex is named
/// by the set of leaf labels below it. Tries all n! permutations.
std::vector<Permutation> brute_automorphisms(
    const CanonicalTree& t, std::uint32_t cap = kBruteAutomorphismCap);

/// One tanglegram per double coset A(right) m A(left) of S_n, for the given
/// pair of trees, each carrying the least matching of its class.
std::vector<Tanglegram> brute_pair_classes(
    const CanonicalTree& left, const CanonicalTree& right,
    std::uint32_t cap = kOracleCap);

/// Every tanglegram of size n, one canonical representative per class,
/// ordered by (left, right) in B_n order and then by matching.
std::vector<Tanglegram> brute_tanglegrams(std::uint32_t n,
                                          std::uint32_t cap = kOracleCap);

/// Classes of brute_tanglegrams(n) after identifying (T, m, S) with
/// (S, m^{-1}, T).
ExactCount brute_unordered_count(std::uint32_t n,
                                 std::uint32_t cap = kOracleCap);

/// Tangled chains of k trees on n leaves by orbit enumeration over
/// (S_n)^{k-1}. Default cap keeps (n!)^{k-1} small.
ExactCount brute_chain_count(unsigned k, std::uint32_t n,
                             std::uint32_t cap = 4);

}  // namespace tangle
