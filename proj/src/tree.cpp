#include "tangle/tree.hpp"

#include <stdexcept>

namespace tangle {

CanonicalTree::CanonicalTree() {
  static const auto kLeaf = std::make_shared<const Rep>();
  rep_ = kLeaf;
}

CanonicalTree CanonicalTree::node(const CanonicalTree& left,
                                  const CanonicalTree& right) {
  if (compare(left, right) < 0) {
    throw std::invalid_argument("non-canonical tree: left subtree " +
                                left.to_string() + " < right subtree " +
                                right.to_string());
  }
  auto rep = std::make_shared<Rep>();
  rep->left = left.rep_;
  rep->right = right.rep_;
  rep->leaves = left.leaf_count() + right.leaf_count();
  return CanonicalTree(std::move(rep));
}

CanonicalTree CanonicalTree::join(const CanonicalTree& a,
                                  const CanonicalTree& b) {
  return compare(a, b) < 0 ? node(b, a) : node(a, b);
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  CanonicalTree parse_tree() {
    if (pos >= text.size()) throw std::invalid_argument("tree string ends early");
    const char c = text[pos++];
    if (c == '.') return CanonicalTree::leaf();
    if (c != '(') {
      throw std::invalid_argument(std::string("unexpected character '") + c +
                                  "' in tree string");
    }
    CanonicalTree left = parse_tree();
    CanonicalTree right = parse_tree();
    if (pos >= text.size() || text[pos] != ')') {
      throw std::invalid_argument("expected ')' in tree string");
    }
    ++pos;
    return CanonicalTree::node(left, right);
  }
};

}  // namespace

CanonicalTree CanonicalTree::parse(std::string_view text) {
  Parser p{text};
  CanonicalTree t = p.parse_tree();
  if (p.pos != text.size()) {
    throw std::invalid_argument("trailing characters in tree string");
  }
  return t;
}

void CanonicalTree::write(const Rep* r, std::string& out) {
  if (r->left == nullptr) {
    out += '.';
    return;
  }
  out += '(';
  write(r->left.get(), out);
  write(r->right.get(), out);
  out += ')';
}

std::string CanonicalTree::to_string() const {
  std::string out;
  out.reserve(3 * leaf_count());
  write(rep_.get(), out);
  return out;
}

std::strong_ordering CanonicalTree::compare_rep(const Rep* a, const Rep* b) {
  if (a == b) return std::strong_ordering::equal;
  if (a->leaves != b->leaves) return a->leaves <=> b->leaves;
  if (a->left == nullptr) return std::strong_ordering::equal;
  if (auto c = compare_rep(a->left.get(), b->left.get()); c != 0) return c;
  return compare_rep(a->right.get(), b->right.get());
}

std::strong_ordering compare(const CanonicalTree& a, const CanonicalTree& b) {
  return CanonicalTree::compare_rep(a.rep_.get(), b.rep_.get());
}

std::vector<CanonicalTree> enumerate_trees(std::uint32_t n, std::uint32_t cap) {
  if (n == 0) throw std::invalid_argument("trees need at least one leaf");
  if (n > cap) throw CapExceeded("tree enumeration", n, cap);
  std::vector<std::vector<CanonicalTree>> by_size(n + 1);
  by_size[1] = {CanonicalTree::leaf()};
  for (std::uint32_t m = 2; m <= n; ++m) {
    auto& out = by_size[m];
    for (std::uint32_t a = m - 1; 2 * a >= m; --a) {
      const auto& lefts = by_size[a];
      const auto& rights = by_size[m - a];
      for (std::size_t i = 0; i < lefts.size(); ++i) {
        // Equal halves: only right <= left, and rights are in decreasing
        // order, so start at the left tree's own position.
        const std::size_t start = (2 * a == m) ? i : 0;
        for (std::size_t j = start; j < rights.size(); ++j) {
          out.push_back(CanonicalTree::node(lefts[i], rights[j]));
        }
      }
    }
  }
  return std::move(by_size[n]);
}

CanonicalTree caterpillar(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("trees need at least one leaf");
  CanonicalTree t;
  for (std::uint32_t i = 1; i < n; ++i) t = CanonicalTree::node(t, CanonicalTree::leaf());
  return t;
}

CanonicalTree complete_tree(std::uint32_t depth) {
  CanonicalTree t;
  for (std::uint32_t d = 0; d < depth; ++d) t = CanonicalTree::node(t, t);
  return t;
}

ExactCount aut_size(const CanonicalTree& t) {
  if (t.is_leaf()) return 1;
  const CanonicalTree l = t.left();
  const CanonicalTree r = t.right();
  if (l == r) {
    const ExactCount a = aut_size(l);
    return 2 * a * a;
  }
  return aut_size(l) * aut_size(r);
}

ExactCount CycleTypeTable::operator[](const BinaryPartition& lambda) const {
  auto it = counts.find(lambda);
  return it == counts.end() ? ExactCount(0) : it->second;
}

namespace {

CycleTypeTable convolve(const CycleTypeTable& a, const CycleTypeTable& b) {
  CycleTypeTable out;
  for (const auto& [mu1, c1] : a.counts) {
    for (const auto& [mu2, c2] : b.counts) out.counts[mu1 + mu2] += c1 * c2;
  }
  out.total = a.total * b.total;
  return out;
}

}  // namespace

CycleTypeTable cycle_type_table(const CanonicalTree& t) {
  if (t.is_leaf()) {
    CycleTypeTable out;
    out.counts[BinaryPartition::from_parts({1})] = 1;
    out.total = 1;
    return out;
  }
  const CanonicalTree l = t.left();
  const CanonicalTree r = t.right();
  if (l != r) return convolve(cycle_type_table(l), cycle_type_table(r));

  // Elements either keep both halves (product of two elements of A(T1)) or
  // swap them; a swapping element pi w1 pi w1^{-1} pi w2 has type 2 mu where
  // mu is the type of w2, and w1 ranges freely over A(T1).
  const CycleTypeTable half = cycle_type_table(l);
  CycleTypeTable out = convolve(half, half);
  for (const auto& [mu, c] : half.counts) {
    out.counts[mu.doubled()] += half.total * c;
  }
  out.total = 2 * half.total * half.total;
  return out;
}

std::vector<Permutation> automorphisms(const CanonicalTree& t,
                                       std::uint32_t cap) {
  if (t.leaf_count() > cap) {
    throw CapExceeded("automorphism enumeration", t.leaf_count(), cap);
  }
  if (t.is_leaf()) return {Permutation::identity(1)};
  const CanonicalTree l = t.left();
  const CanonicalTree r = t.right();
  const std::size_t k = l.leaf_count();
  const std::size_t n = t.leaf_count();
  const auto left_group = automorphisms(l, cap);
  const auto right_group = l == r ? left_group : automorphisms(r, cap);
  std::vector<Permutation> out;
  for (const auto& a : left_group) {
    const Permutation wa = a.embedded(0, n);
    for (const auto& b : right_group) {
      out.push_back(compose(wa, b.embedded(k, n)));
    }
  }
  if (l == r) {
    const Permutation pi = flip(k);
    const std::size_t kept = out.size();
    for (std::size_t i = 0; i < kept; ++i) out.push_back(compose(pi, out[i]));
  }
  return out;
}

std::uint64_t cherries(const CanonicalTree& t) {
  if (t.is_leaf()) return 0;
  const CanonicalTree l = t.left();
  const CanonicalTree r = t.right();
  if (l.is_leaf() && r.is_leaf()) return 1;
  return cherries(l) + cherries(r);
}

std::uint64_t count_occurrences(const CanonicalTree& pattern,
                                const CanonicalTree& t) {
  if (t.leaf_count() < pattern.leaf_count()) return 0;
  if (t.leaf_count() == pattern.leaf_count()) return t == pattern ? 1 : 0;
  return count_occurrences(pattern, t.left()) +
         count_occurrences(pattern, t.right());
}

std::uint64_t symmetry_count(const CanonicalTree& t) {
  if (t.is_leaf()) return 0;
  const CanonicalTree l = t.left();
  const CanonicalTree r = t.right();
  return (l == r ? 1 : 0) + symmetry_count(l) + symmetry_count(r);
}

}  // namespace tangle
