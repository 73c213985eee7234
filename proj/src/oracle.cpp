#include "tangle/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace tangle {

namespace {

using Mask = std::uint32_t;

// Leaf-label set of every vertex; returns the mask of `t` and appends
// (child, parent) edges.
Mask collect_edges(const CanonicalTree& t, std::uint32_t& next_label,
                   std::vector<std::pair<Mask, Mask>>& edges) {
  if (t.is_leaf()) return Mask{1} << next_label++;
  const Mask l = collect_edges(t.left(), next_label, edges);
  const Mask r = collect_edges(t.right(), next_label, edges);
  const Mask self = l | r;
  edges.emplace_back(l, self);
  edges.emplace_back(r, self);
  return self;
}

Mask apply(const Permutation& p, Mask m) {
  Mask out = 0;
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (m & (Mask{1} << i)) out |= Mask{1} << p.at(i);
  }
  return out;
}

std::uint64_t factorial_u64(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<Permutation> brute_automorphisms(const CanonicalTree& t,
                                             std::uint32_t cap) {
  const std::uint32_t n = t.leaf_count();
  if (n > cap) throw CapExceeded("brute-force automorphisms", n, cap);
  std::uint32_t label = 0;
  std::vector<std::pair<Mask, Mask>> edges;
  collect_edges(t, label, edges);
  std::sort(edges.begin(), edges.end());

  std::vector<Permutation> out;
  std::vector<std::pair<Mask, Mask>> moved(edges.size());
  for (const auto& p : all_permutations(n)) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      moved[e] = {apply(p, edges[e].first), apply(p, edges[e].second)};
    }
    std::sort(moved.begin(), moved.end());
    if (moved == edges) out.push_back(p);
  }
  return out;
}

std::vector<Tanglegram> brute_pair_classes(const CanonicalTree& left,
                                           const CanonicalTree& right,
                                           std::uint32_t cap) {
  const std::uint32_t n = left.leaf_count();
  if (right.leaf_count() != n) {
    throw std::invalid_argument("brute_pair_classes: leaf counts differ");
  }
  if (n > cap) throw CapExceeded("brute-force tanglegrams", n, cap);
  const auto left_group = brute_automorphisms(left, std::max(cap, n));
  const auto right_group = brute_automorphisms(right, std::max(cap, n));
  std::vector<Permutation> left_inverse;
  for (const auto& a : left_group) left_inverse.push_back(a.inverse());

  // Matchings are visited in lexicographic order, so the first unvisited one
  // is the least element of its double coset.
  const auto perms = all_permutations(n);
  std::vector<bool> visited(perms.size(), false);
  std::vector<Tanglegram> out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (visited[i]) continue;
    out.push_back({left, right, perms[i]});
    for (const auto& b : right_group) {
      const Permutation bv = compose(b, perms[i]);
      for (const auto& a_inv : left_inverse) {
        visited[rank(compose(bv, a_inv))] = true;
      }
    }
  }
  return out;
}

std::vector<Tanglegram> brute_tanglegrams(std::uint32_t n, std::uint32_t cap) {
  if (n > cap) throw CapExceeded("brute-force tanglegrams", n, cap);
  std::vector<Tanglegram> out;
  const auto trees = enumerate_trees(n, std::max(cap, kDefaultTreeCap));
  for (const auto& t : trees) {
    for (const auto& s : trees) {
      auto classes = brute_pair_classes(t, s, cap);
      out.insert(out.end(), std::make_move_iterator(classes.begin()),
                 std::make_move_iterator(classes.end()));
    }
  }
  return out;
}

ExactCount brute_unordered_count(std::uint32_t n, std::uint32_t cap) {
  using Key = std::tuple<std::string, std::string, std::vector<std::uint32_t>>;
  std::set<Key> orbits;
  std::map<std::string, std::vector<Permutation>> groups;
  auto group_of = [&](const CanonicalTree& t) -> const std::vector<Permutation>& {
    auto [it, inserted] = groups.try_emplace(t.to_string());
    if (inserted) it->second = brute_automorphisms(t, std::max(cap, n));
    return it->second;
  };
  for (const auto& t : brute_tanglegrams(n, cap)) {
    const Key key{t.left.to_string(), t.right.to_string(), t.matching.one_line()};
    const Permutation swapped = double_coset_min(
        t.matching.inverse(), group_of(t.left), group_of(t.right));
    const Key other{t.right.to_string(), t.left.to_string(), swapped.one_line()};
    orbits.insert(std::min(key, other));
  }
  return ExactCount(orbits.size());
}

ExactCount brute_chain_count(unsigned k, std::uint32_t n, std::uint32_t cap) {
  if (k == 0) throw std::invalid_argument("chain length must be >= 1");
  if (n > cap) throw CapExceeded("brute-force chains", n, cap);
  const auto trees = enumerate_trees(n, std::max(cap, kDefaultTreeCap));
  if (k == 1) return ExactCount(trees.size());

  std::vector<std::vector<Permutation>> groups;
  for (const auto& t : trees) groups.push_back(brute_automorphisms(t, std::max(cap, n)));
  const auto perms = all_permutations(n);
  const std::uint64_t fact = factorial_u64(n);
  std::uint64_t tuples = 1;
  for (unsigned i = 0; i + 1 < k; ++i) tuples *= fact;

  ExactCount total = 0;
  std::vector<std::size_t> choice(k, 0);  // which tree sits at each position
  while (true) {
    std::vector<std::vector<Permutation>> g;
    std::vector<std::vector<Permutation>> g_inv;
    for (unsigned i = 0; i < k; ++i) {
      g.push_back(groups[choice[i]]);
      auto& inv = g_inv.emplace_back();
      for (const auto& x : g.back()) inv.push_back(x.inverse());
    }
    std::vector<bool> visited(tuples, false);
    for (std::uint64_t code = 0; code < tuples; ++code) {
      if (visited[code]) continue;
      ++total;
      std::vector<Permutation> m;
      for (std::uint64_t c = code, i = 0; i + 1 < k; ++i, c /= fact) {
        m.push_back(perms[c % fact]);
      }
      // Orbit under m_i -> t_{i+1} m_i t_i^{-1}.
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        std::uint64_t image = 0;
        for (std::size_t i = k - 1; i-- > 0;) {
          const Permutation x =
              compose(g[i + 1][idx[i + 1]], compose(m[i], g_inv[i][idx[i]]));
          image = image * fact + rank(x);
        }
        visited[image] = true;
        std::size_t i = 0;
        while (i < k && ++idx[i] == g[i].size()) idx[i++] = 0;
        if (i == k) break;
      }
    }
    std::size_t i = 0;
    while (i < k && ++choice[i] == trees.size()) choice[i++] = 0;
    if (i == k) break;
  }
  return total;
}

}  // namespace tangle
