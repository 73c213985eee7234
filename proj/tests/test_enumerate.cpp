#include <functional>

#include <gtest/gtest.h>

#include "tangle/enumerate.hpp"
#include "tangle/rng.hpp"

namespace tangle {
namespace {

const std::vector<const char*> kTanglegrams{
    "1", "1", "2", "13", "114", "1509", "25595", "535753", "13305590",
    "382728552"};
const std::vector<const char*> kTrees{"1", "1", "1", "2", "3",
                                      "6", "11", "23", "46", "98"};
const std::vector<const char*> kChains3{
    "1",        "1",           "5",              "151",
    "9944",     "1196991",     "226435150",      "61992679960",
    "23198439767669", "11380100883484302"};

ExactCount C(const char* s) { return ExactCount(s); }

TEST(Enumerate, TanglegramSequence) {
  for (std::uint64_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(tanglegram_count(n), C(kTanglegrams[n - 1])) << n;
  }
}

TEST(Enumerate, TanglegramFourTerms) {
  // 1/4 + 9/8 + 9/4 + 225/24 = 13, one term per binary partition of 4.
  std::vector<ExactRatio> terms;
  for (const auto& lambda : enumerate_binary_partitions(4)) {
    terms.push_back(ExactRatio(pow(suffix_product(lambda), 2)) /
                    ExactRatio(z_of(lambda)));
  }
  ASSERT_EQ(terms.size(), 4u);
  EXPECT_EQ(terms[0], ExactRatio(1, 4));
  EXPECT_EQ(terms[1], ExactRatio(9, 8));
  EXPECT_EQ(terms[2], ExactRatio(9, 4));
  EXPECT_EQ(terms[3], ExactRatio(225, 24));
}

TEST(Enumerate, TanglegramFortyTwo) {
  EXPECT_EQ(to_decimal(tanglegram_count(42)),
            "33889136420378480492869677415186948305278176263020722832251621520063757");
}

TEST(Enumerate, TreeSequence) {
  for (std::uint64_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(tree_count(n), C(kTrees[n - 1])) << n;
    EXPECT_EQ(tree_count_oracle(n), C(kTrees[n - 1])) << n;
  }
}

TEST(Enumerate, TreeCountMatchesOracle) {
  const auto b = tree_counts_oracle(200);
  for (std::uint64_t n = 1; n <= 200; ++n) EXPECT_EQ(tree_count(n), b[n]) << n;
  EXPECT_EQ(tree_count(50), tree_count_oracle(50));
}

TEST(Enumerate, ChainSequence) {
  for (std::uint64_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(chain_count(3, n), C(kChains3[n - 1])) << n;
    EXPECT_EQ(chain_count_rec(3, n), C(kChains3[n - 1])) << n;
  }
}

TEST(Enumerate, ChainThreeThreeTerms) {
  // 1^3 / 2 + 3^3 * 1^3 / 6 = 5
  const auto parts = enumerate_binary_partitions(3);
  ExactRatio sum = 0;
  for (const auto& lambda : parts) {
    sum += ExactRatio(pow(suffix_product(lambda), 3)) / ExactRatio(z_of(lambda));
  }
  EXPECT_EQ(sum, 5);
}

TEST(Enumerate, ChainSpecialCases) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    EXPECT_EQ(chain_count(1, n), tree_count(n));
    EXPECT_EQ(chain_count(2, n), tanglegram_count(n));
  }
}

TEST(Enumerate, RejectsZero) {
  EXPECT_THROW(tanglegram_count(0), std::invalid_argument);
  EXPECT_THROW(chain_count(0, 3), std::invalid_argument);
  EXPECT_THROW(chain_count_rec(2, 0), std::invalid_argument);
  EXPECT_THROW(tanglegram_count_mu(1), std::invalid_argument);
}

TEST(Enumerate, RecurrenceBaseAndSmallValues) {
  CountCache cache;
  EXPECT_EQ(cache.r(2, 0, 0, 0), 1);
  EXPECT_EQ(cache.r(2, 3, 0, 17), 1);
  EXPECT_EQ(cache.r(2, 0, 4, 0), 637);
  EXPECT_EQ(cache.r(3, 0, 3, 0), 625);
  EXPECT_EQ(tanglegram_count_rec(4, cache), 13);
  EXPECT_EQ(chain_count_rec(3, 3, cache), 5);
  EXPECT_EQ(chain_count_rec(1, 10), 98);
}

TEST(Enumerate, RecurrenceCacheIsIdempotent) {
  CountCache cache;
  const auto first = cache.r(2, 0, 30, 0);
  const auto size = cache.size();
  EXPECT_EQ(cache.r(2, 0, 30, 0), first);
  EXPECT_EQ(cache.size(), size);
  CountCache fresh;
  EXPECT_EQ(fresh.r(2, 1, 7, 4), cache.r(2, 1, 7, 4));
}

TEST(Enumerate, LevelFactor) {
  EXPECT_EQ(level_factor(2, 0, 0, 5), 1);
  // m = 2, h = 1, s = 0: (3^2 / 2) (7^2 / 4)
  EXPECT_EQ(level_factor(2, 1, 2, 0), ExactRatio(9 * 49, 8));
}

TEST(Enumerate, RecurrenceFromDefinition) {
  // r(h, n, s) = sum over m = n mod 2 of c(h, m, s) r(h + 1, (n - m) / 2, s + m 2^h),
  // evaluated without memoization.
  std::function<ExactRatio(std::uint32_t, std::uint64_t, std::uint64_t)> r =
      [&](std::uint32_t h, std::uint64_t n, std::uint64_t s) -> ExactRatio {
    if (n == 0) return 1;
    ExactRatio total = 0;
    for (std::uint64_t m = n % 2; m <= n; m += 2) {
      total += level_factor(2, h, m, s) * r(h + 1, (n - m) / 2, s + (m << h));
    }
    return total;
  };
  for (std::uint64_t n = 1; n <= 16; ++n) {
    EXPECT_EQ(r(0, n, 0) / ExactRatio((2 * n - 1) * (2 * n - 1)),
              ExactRatio(tanglegram_count(n)))
        << n;
  }
}

TEST(Enumerate, CrossFormulas) {
  CountCache cache;
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const auto direct = tanglegram_count(n);
    EXPECT_EQ(direct, tanglegram_count_rec(n, cache)) << n;
    EXPECT_EQ(direct, tanglegram_count_mu(n)) << n;
  }
  for (unsigned k = 1; k <= 4; ++k) {
    CountCache chain_cache;
    for (std::uint64_t n = 1; n <= 30; ++n) {
      EXPECT_EQ(chain_count(k, n), chain_count_rec(k, n, chain_cache)) << k << ' ' << n;
    }
  }
}

TEST(Enumerate, ThousandHas3160Digits) {
  EXPECT_EQ(to_decimal(tanglegram_count_rec(1000)).size(), 3160u);
}

TEST(Enumerate, MuSummands) {
  EXPECT_EQ(mu_summand(7, BinaryPartition()), 1);
  for (std::uint64_t n = 2; n <= 20; ++n) {
    EXPECT_EQ(mu_summand(n, BinaryPartition::from_parts({2})),
              ExactRatio(n * (n - 1), 2 * (2 * n - 3) * (2 * n - 3)))
        << n;
  }
  EXPECT_EQ(tanglegram_count_mu(4), 13);
  EXPECT_THROW(mu_summand(5, BinaryPartition::from_parts({2, 1})),
               std::invalid_argument);
}

TEST(Enumerate, DoubleCosetCounts) {
  for (std::uint64_t n = 4; n <= 10; ++n) {
    const auto t = caterpillar(static_cast<std::uint32_t>(n));
    EXPECT_EQ(double_coset_count(t, t),
              ExactCount((n * n - n + 2)) * factorial(n - 2) / 4)
        << n;
  }
  const auto three = caterpillar(3);
  EXPECT_EQ(double_coset_count(three, three), 2);
  for (std::uint32_t n = 1; n <= 7; ++n) {
    ExactCount sum = 0;
    const auto trees = enumerate_trees(n);
    for (const auto& t : trees) {
      for (const auto& s : trees) sum += double_coset_count(t, s);
    }
    EXPECT_EQ(sum, tanglegram_count(n)) << n;
  }
  EXPECT_THROW(double_coset_count(caterpillar(3), caterpillar(4)),
               std::invalid_argument);
}

// Straight transcription of r_S: product over t = 2..k of the suffix sums
// x_{i_t} + ... + x_{i_k} minus one.
ExactRatio brute_r(const std::vector<std::uint32_t>& s,
                   const std::vector<ExactRatio>& x) {
  ExactRatio out = 1;
  for (std::size_t t = 1; t < s.size(); ++t) {
    ExactRatio sum = 0;
    for (std::size_t j = t; j < s.size(); ++j) sum += x[s[j] - 1];
    out *= sum - 1;
  }
  return out;
}

TEST(Enumerate, RPolyExamples) {
  const std::vector<ExactRatio> x{ExactRatio(3, 7), ExactRatio(5, 2),
                                  ExactRatio(-4, 9), ExactRatio(11)};
  const std::vector<std::uint32_t> s{1, 2, 3};
  EXPECT_EQ(r_poly(s, x), (x[1] + x[2] - 1) * (x[2] - 1));
  const std::vector<std::uint32_t> single{4};
  EXPECT_EQ(r_poly(single, x), 1);
  for (std::uint32_t k = 1; k <= 8; ++k) {
    std::vector<ExactRatio> twos(k, ExactRatio(2));
    std::vector<std::uint32_t> all(k);
    for (std::uint32_t i = 0; i < k; ++i) all[i] = i + 1;
    EXPECT_EQ(r_poly(all, twos), ExactRatio(odd_double_factorial(static_cast<std::int64_t>(k) - 1)))
        << k;
  }
  const std::vector<std::uint32_t> empty;
  EXPECT_THROW(r_poly(empty, x), std::invalid_argument);
}

ExactRatio random_rational(Rng& rng) {
  const auto num = static_cast<std::int64_t>(rng.uniform(201)) - 100;
  const auto den = static_cast<std::int64_t>(rng.uniform(50)) + 1;
  return ExactRatio(num, den);
}

TEST(Enumerate, RPolyHalvingRecursion) {
  Rng rng(777);
  for (std::uint32_t n = 1; n <= 6; ++n) {
    std::vector<std::uint32_t> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i + 1;
    for (int point = 0; point < 100; ++point) {
      std::vector<ExactRatio> x(n), half(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        x[i] = random_rational(rng);
        half[i] = x[i] / 2;
      }
      EXPECT_EQ(r_poly(all, x), brute_r(all, x));
      ExactRatio rhs = ExactRatio(pow(ExactCount(2), n - 1)) * r_poly(all, half);
      // Subsets containing 1 other than the full set, as bit masks over 2..n.
      for (std::uint32_t mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
        std::vector<std::uint32_t> s{1}, rest;
        for (std::uint32_t i = 2; i <= n; ++i) {
          ((mask >> (i - 2)) & 1 ? s : rest).push_back(i);
        }
        rhs += brute_r(s, x) * brute_r(rest, x);
      }
      EXPECT_EQ(r_poly(all, x), rhs) << "n=" << n;
    }
  }
}

}  // namespace
}  // namespace tangle
