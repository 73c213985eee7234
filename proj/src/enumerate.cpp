#include "tangle/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace tangle {

namespace {

ExactCount odd_power(std::uint64_t suffix, unsigned k) {
  return pow(ExactCount(2 * suffix - 1), k);
}

// Walks binary partitions by multiplicity, smallest parts first. `term`
// carries n! * prod (2 suffix - 1)^k / z over the parts chosen so far; every
// partial z divides z_lambda, which divides n!, so each division is exact.
void accumulate(unsigned k, std::uint32_t level, std::uint64_t remaining,
                std::uint64_t suffix, const ExactCount& term, ExactCount& acc) {
  const std::uint64_t part = std::uint64_t{1} << level;
  ExactCount cur = term;
  for (std::uint64_t m = 0; m <= remaining; ++m) {
    if (m > 0) {
      cur *= odd_power(suffix + m * part, k);
      divide_exact(cur, m * part);
    }
    const std::uint64_t left = remaining - m;
    if (left == 0) {
      acc += cur;
    } else if (left % 2 == 0) {
      accumulate(k, level + 1, left / 2, suffix + m * part, cur, acc);
    }
  }
}

}  // namespace

ExactCount partition_sum(unsigned k, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("counts need n >= 1");
  if (k == 0) throw std::invalid_argument("chain length must be >= 1");
  const ExactCount n_fact = factorial(n);
  ExactCount acc = 0;
  accumulate(k, 0, n, 0, n_fact, acc);
  // acc carries the i = 1 factor (2n - 1)^k and the n! scale.
  return exact_quotient(acc, n_fact * odd_power(n, k), "partition sum");
}

ExactCount tanglegram_count(std::uint64_t n) { return partition_sum(2, n); }

ExactCount tree_count(std::uint64_t n) { return partition_sum(1, n); }

ExactCount chain_count(unsigned k, std::uint64_t n) {
  return partition_sum(k, n);
}

ExactCount double_coset_count(const CanonicalTree& t, const CanonicalTree& s) {
  if (t.leaf_count() != s.leaf_count()) {
    throw std::invalid_argument("double_coset_count: leaf counts differ");
  }
  const CycleTypeTable ta = cycle_type_table(t);
  const CycleTypeTable sa = cycle_type_table(s);
  ExactCount num = 0;
  for (const auto& [lambda, c] : ta.counts) {
    const ExactCount d = sa[lambda];
    if (d != 0) num += c * d * z_of(lambda);
  }
  return exact_quotient(num, ta.total * sa.total, "double coset count");
}

ExactRatio level_factor(unsigned k, std::uint32_t h, std::uint64_t m,
                        std::uint64_t s) {
  const std::uint64_t part = std::uint64_t{1} << h;
  ExactRatio c = 1;
  for (std::uint64_t j = 1; j <= m; ++j) {
    c *= ExactRatio(odd_power(s + j * part, k), ExactCount(j * part));
  }
  return c;
}

ExactRatio CountCache::r(unsigned k, std::uint32_t h, std::uint64_t n,
                         std::uint64_t s) {
  if (n == 0) return ExactRatio(1);
  const auto key = std::make_tuple(k, h, n, s);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const std::uint64_t part = std::uint64_t{1} << h;
  ExactRatio total = 0;
  ExactRatio c = 1;  // c^k(h, m, s), extended one factor per step
  for (std::uint64_t m = 0; m <= n; ++m) {
    if (m > 0) {
      c *= ExactRatio(odd_power(s + m * part, k), ExactCount(m * part));
    }
    if ((n - m) % 2 == 0) total += c * r(k, h + 1, (n - m) / 2, s + m * part);
  }
  memo_.emplace(key, total);
  return total;
}

ExactCount chain_count_rec(unsigned k, std::uint64_t n, CountCache& cache) {
  if (n == 0) throw std::invalid_argument("counts need n >= 1");
  if (k == 0) throw std::invalid_argument("chain length must be >= 1");
  const ExactRatio r = cache.r(k, 0, n, 0);
  return to_integer(r / ExactRatio(odd_power(n, k)), "level recurrence");
}

ExactCount chain_count_rec(unsigned k, std::uint64_t n) {
  CountCache cache;
  return chain_count_rec(k, n, cache);
}

ExactCount tanglegram_count_rec(std::uint64_t n, CountCache& cache) {
  return chain_count_rec(2, n, cache);
}

ExactCount tanglegram_count_rec(std::uint64_t n) {
  return chain_count_rec(2, n);
}

ExactRatio mu_summand(std::uint64_t n, const BinaryPartition& mu) {
  if (mu.multiplicity(0) != 0) {
    throw std::invalid_argument("mu parts must be >= 2");
  }
  if (mu.size() > n) throw std::invalid_argument("|mu| must be <= n");
  ExactCount falling = 1;
  for (std::uint64_t i = 0; i < mu.size(); ++i) falling *= n - i;
  ExactCount removed = 1;
  std::uint64_t before = 0;  // mu_1 + ... + mu_{i-1}
  for (std::uint64_t part : mu.parts()) {
    for (std::uint64_t j = 1; j < part; ++j) {
      const std::uint64_t f = 2 * n - 2 * before - 2 * j - 1;
      removed *= f;
      removed *= f;
    }
    before += part;
  }
  return ExactRatio(falling, z_of(mu) * removed);
}

ExactCount tanglegram_count_mu(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("the mu-form needs n >= 2");
  ExactRatio sum = 0;
  for (std::uint64_t half = 0; 2 * half <= n; ++half) {
    for (const auto& nu : enumerate_binary_partitions(static_cast<std::int64_t>(half))) {
      sum += mu_summand(n, nu.doubled());
    }
  }
  const ExactCount c = catalan(n - 1);
  const ExactRatio prefactor(c * c * factorial(n), pow(ExactCount(4), static_cast<unsigned>(n - 1)));
  return to_integer(prefactor * sum, "mu-form");
}

std::vector<ExactCount> tree_counts_oracle(std::uint64_t n) {
  std::vector<ExactCount> b(n + 1, 0);
  if (n >= 1) b[1] = 1;
  for (std::uint64_t m = 2; m <= n; ++m) {
    ExactCount twice = 0;
    for (std::uint64_t i = 1; i < m; ++i) twice += b[i] * b[m - i];
    if (m % 2 == 0) twice += b[m / 2];
    b[m] = exact_quotient(twice, 2, "tree count recurrence");
  }
  return b;
}

ExactCount tree_count_oracle(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("counts need n >= 1");
  return tree_counts_oracle(n)[n];
}

ExactRatio r_poly(std::span<const std::uint32_t> subset,
                  std::span<const ExactRatio> x) {
  if (subset.empty()) throw std::invalid_argument("r_poly: empty index set");
  std::vector<std::uint32_t> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw std::invalid_argument("r_poly: repeated index");
  }
  if (s.front() < 1 || s.back() > x.size()) {
    throw std::invalid_argument("r_poly: index outside x");
  }
  ExactRatio out = 1;
  ExactRatio suffix = 0;
  for (std::size_t t = s.size(); t-- > 1;) {
    suffix += x[s[t] - 1];
    out *= suffix - 1;
  }
  return out;
}

}  // namespace tangle
