#include "tangle/sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tangle {

Permutation random_automorphism(const CanonicalTree& t, Rng& rng) {
  if (t.is_leaf()) return Permutation::identity(1);
  const CanonicalTree l = t.left();
  const CanonicalTree r = t.right();
  const std::size_t n = t.leaf_count();
  const std::size_t k = l.leaf_count();
  Permutation w = compose(random_automorphism(l, rng).embedded(0, n),
                          random_automorphism(r, rng).embedded(k, n));
  if (l == r && rng.coin()) w = compose(flip(k), w);
  return w;
}

const ExactCount& Sampler::suffix_product_of(const BinaryPartition& lambda) {
  auto it = suffix_cache_.find(lambda);
  if (it == suffix_cache_.end()) {
    it = suffix_cache_.emplace(lambda, suffix_product(lambda)).first;
  }
  return it->second;
}

const Sampler::Table& Sampler::split_table(const BinaryPartition& lambda) {
  if (auto it = split_cache_.find(lambda); it != split_cache_.end()) {
    return it->second;
  }
  // Weights are the split probabilities scaled by 2 z_lambda q_lambda:
  // q1 q2 -> binom(lambda; first) P(first) P(second) and
  // q(lambda/2) -> 2^{l(lambda)} P(lambda/2), with P the suffix product.
  Table table;
  ExactCount running = 0;
  for (auto& [first, second] : split_pairs(lambda)) {
    if (first.empty() || second.empty()) continue;
    running += split_multiplicity(lambda, first) * suffix_product_of(first) *
               suffix_product_of(second);
    table.options.push_back({std::move(first), std::move(second), false});
    table.cumulative.push_back(running);
  }
  const HalfPartition half = halve(lambda);
  if (!half.degenerate()) {
    BinaryPartition h = half.partition();
    running += pow(ExactCount(2), static_cast<unsigned>(lambda.length())) *
               suffix_product_of(h);
    table.options.push_back({h, h, true});
    table.cumulative.push_back(running);
  }
  if (running != 2 * suffix_product_of(lambda)) {
    throw IntegralityError("split weights of " + lambda.to_string() +
                           " do not sum to 2 z q");
  }
  return split_cache_.emplace(lambda, std::move(table)).first->second;
}

std::size_t Sampler::pick(const Table& table, Rng& rng) {
  const ExactCount r = rng.uniform(table.cumulative.back());
  auto it = std::upper_bound(table.cumulative.begin(), table.cumulative.end(), r);
  return static_cast<std::size_t>(it - table.cumulative.begin());
}

std::pair<CanonicalTree, Permutation> Sampler::random_tree_and_perm(
    const BinaryPartition& lambda, Rng& rng) {
  if (lambda.empty()) {
    throw std::invalid_argument("random_tree_and_perm: empty partition");
  }
  if (lambda.size() == 1) return {CanonicalTree::leaf(), Permutation::identity(1)};

  const Table& table = split_table(lambda);
  const Option& option = table.options[pick(table, rng)];
  const std::size_t n = lambda.size();

  if (option.halved) {
    auto [sub, w2] = random_tree_and_perm(option.first, rng);
    const Permutation w1 = random_automorphism(sub, rng);
    const std::size_t k = sub.leaf_count();
    return {CanonicalTree::node(sub, sub),
            interleave(w1.embedded(0, n), w2.embedded(k, n), k)};
  }

  auto a = random_tree_and_perm(option.first, rng);
  auto b = random_tree_and_perm(option.second, rng);
  if (a.first < b.first) std::swap(a, b);
  const std::size_t k = a.first.leaf_count();
  return {CanonicalTree::node(a.first, b.first),
          compose(a.second.embedded(0, n), b.second.embedded(k, n))};
}

const Sampler::Table& Sampler::cycle_type_table_for(unsigned k,
                                                    std::uint32_t n) {
  const auto key = std::make_pair(k, n);
  if (auto it = top_cache_.find(key); it != top_cache_.end()) return it->second;
  // z^{k-1} q^k = P^k / z, scaled by n! to stay integral.
  const ExactCount n_fact = factorial(n);
  Table table;
  ExactCount running = 0;
  for (auto& lambda : enumerate_binary_partitions(n)) {
    running += pow(suffix_product_of(lambda), k) * (n_fact / z_of(lambda));
    table.options.push_back({std::move(lambda), {}, false});
    table.cumulative.push_back(running);
  }
  return top_cache_.emplace(key, std::move(table)).first->second;
}

BinaryPartition Sampler::random_cycle_type(unsigned k, std::uint32_t n,
                                           Rng& rng) {
  if (n == 0) throw std::invalid_argument("sampling needs n >= 1");
  if (k == 0) throw std::invalid_argument("chain length must be >= 1");
  const Table& table = cycle_type_table_for(k, n);
  return table.options[pick(table, rng)].first;
}

Tanglegram Sampler::random_tanglegram(std::uint32_t n, Rng& rng) {
  const BinaryPartition lambda = random_cycle_type(2, n, rng);
  auto [t, u] = random_tree_and_perm(lambda, rng);
  auto [s, v] = random_tree_and_perm(lambda, rng);
  // w v w^{-1} = u, so w^{-1} carries left labels to right labels.
  const Permutation w = sample_conjugator(u, v, rng);
  return {std::move(t), std::move(s), w.inverse()};
}

CanonicalTree Sampler::random_tree(std::uint32_t n, Rng& rng) {
  const BinaryPartition lambda = random_cycle_type(1, n, rng);
  return random_tree_and_perm(lambda, rng).first;
}

TangledChain Sampler::random_chain(unsigned k, std::uint32_t n, Rng& rng) {
  const BinaryPartition lambda = random_cycle_type(k, n, rng);
  TangledChain chain;
  std::vector<Permutation> perms;
  for (unsigned i = 0; i < k; ++i) {
    auto [t, u] = random_tree_and_perm(lambda, rng);
    chain.trees.push_back(std::move(t));
    perms.push_back(std::move(u));
  }
  for (unsigned i = 0; i + 1 < k; ++i) {
    chain.matchings.push_back(
        sample_conjugator(perms[i], perms[i + 1], rng).inverse());
  }
  return chain;
}

Tanglegram random_tanglegram(std::uint32_t n, Rng& rng) {
  return Sampler().random_tanglegram(n, rng);
}

CanonicalTree random_tree(std::uint32_t n, Rng& rng) {
  return Sampler().random_tree(n, rng);
}

TangledChain random_chain(unsigned k, std::uint32_t n, Rng& rng) {
  return Sampler().random_chain(k, n, rng);
}

std::pair<CanonicalTree, Permutation> random_tree_and_perm(
    const BinaryPartition& lambda, Rng& rng) {
  return Sampler().random_tree_and_perm(lambda, rng);
}

Tanglegram canonical_rep(const Tanglegram& t, std::uint32_t cap) {
  if (t.size() > cap) throw CapExceeded("canonical_rep", t.size(), cap);
  const auto left_group = automorphisms(t.left, cap);
  const auto right_group = automorphisms(t.right, cap);
  return {t.left, t.right,
          double_coset_min(t.matching, right_group, left_group)};
}

TangledChain canonical_rep(const TangledChain& c, std::uint32_t cap) {
  if (c.trees.empty()) return c;
  const std::uint32_t n = c.trees.front().leaf_count();
  if (n > cap) throw CapExceeded("canonical_rep", n, cap);
  std::vector<std::vector<Permutation>> groups;
  std::vector<std::vector<Permutation>> inverses;
  for (const auto& t : c.trees) {
    groups.push_back(automorphisms(t, cap));
    auto& inv = inverses.emplace_back();
    for (const auto& g : groups.back()) inv.push_back(g.inverse());
  }
  const std::size_t k = c.trees.size();
  std::vector<std::size_t> idx(k, 0);
  std::vector<Permutation> best;
  while (true) {
    std::vector<Permutation> cand;
    cand.reserve(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      cand.push_back(compose(groups[i + 1][idx[i + 1]],
                             compose(c.matchings[i], inverses[i][idx[i]])));
    }
    if (best.empty() || cand < best) best = std::move(cand);
    std::size_t i = 0;
    while (i < k && ++idx[i] == groups[i].size()) idx[i++] = 0;
    if (i == k) break;
  }
  return {c.trees, best.empty() ? c.matchings : best};
}

OccurrenceSummary pattern_statistics(const CanonicalTree& pattern,
                                     std::uint32_t n, std::uint64_t samples,
                                     Rng& rng) {
  OccurrenceSummary out;
  out.pattern = pattern;
  out.n = n;
  out.samples = samples;
  const auto exponent = pattern.leaf_count() + symmetry_count(pattern) - 1;
  out.conjectured_mean = std::ldexp(static_cast<double>(n), -static_cast<int>(exponent));
  Sampler sampler;
  double sum = 0;
  double sum_sq = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Tanglegram t = sampler.random_tanglegram(n, rng);
    const std::uint64_t c = count_occurrences(pattern, t.left);
    ++out.histogram[c];
    sum += static_cast<double>(c);
    sum_sq += static_cast<double>(c) * static_cast<double>(c);
  }
  if (samples > 0) out.mean = sum / static_cast<double>(samples);
  if (samples > 1) {
    out.variance = (sum_sq - sum * out.mean) / static_cast<double>(samples - 1);
  }
  return out;
}

OccurrenceSummary cherry_statistics(std::uint32_t n, std::uint64_t samples,
                                    Rng& rng) {
  return pattern_statistics(CanonicalTree::parse("(..)"), n, samples, rng);
}

nlohmann::ordered_json to_json(const Tanglegram& t) {
  nlohmann::ordered_json j;
  j["n"] = t.size();
  j["left"] = t.left.to_string();
  j["right"] = t.right.to_string();
  j["matching"] = t.matching.one_line();
  return j;
}

nlohmann::ordered_json to_json(const TangledChain& c) {
  nlohmann::ordered_json j;
  j["n"] = c.trees.empty() ? 0 : c.trees.front().leaf_count();
  j["k"] = c.trees.size();
  auto trees = nlohmann::ordered_json::array();
  for (const auto& t : c.trees) trees.push_back(t.to_string());
  j["trees"] = std::move(trees);
  auto matchings = nlohmann::ordered_json::array();
  for (const auto& m : c.matchings) matchings.push_back(m.one_line());
  j["matchings"] = std::move(matchings);
  return j;
}

nlohmann::ordered_json to_json(const OccurrenceSummary& s) {
  nlohmann::ordered_json j;
  j["pattern"] = s.pattern.to_string();
  j["n"] = s.n;
  j["samples"] = s.samples;
  j["mean"] = s.mean;
  j["variance"] = s.variance;
  j["conjectured_mean"] = s.conjectured_mean;
  auto hist = nlohmann::ordered_json::object();
  for (const auto& [count, freq] : s.histogram) hist[std::to_string(count)] = freq;
  j["histogram"] = std::move(hist);
  return j;
}

}  // namespace tangle
