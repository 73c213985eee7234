// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any hard criterion fails; the statistical probe only reports.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "tangle/asym.hpp"
#include "tangle/enumerate.hpp"
#include "tangle/oracle.hpp"
#include "tangle/sample.hpp"

namespace {

using namespace tangle;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  } else if (!cond) {
    o.detail += "; " + what;
  }
}

int failures = 0;

void report(int id, const std::string& title, double limit_s,
            const std::function<Outcome()>& body, bool soft = false) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    std::ostringstream msg;
    msg << "took " << secs << " s, limit " << limit_s << " s";
    require(o, false, msg.str());
  }
  const char* tag = o.ok ? "PASS" : (soft ? "SOFT-MISS" : "FAIL");
  std::cout << "[" << tag << "] criterion " << id << ": " << title << " ("
            << std::fixed << std::setprecision(2) << secs << " s)";
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
  if (!o.ok && !soft) ++failures;
}

std::vector<ExactCount> counts(std::initializer_list<const char*> values) {
  std::vector<ExactCount> out;
  for (const char* v : values) out.emplace_back(v);
  return out;
}

std::string class_key(const Tanglegram& t) {
  std::string s = t.left.to_string() + "|" + t.right.to_string() + "|";
  for (auto v : t.matching.one_line()) s += std::to_string(v) + ",";
  return s;
}

std::string class_key(const TangledChain& c) {
  std::string s;
  for (const auto& t : c.trees) s += t.to_string() + "|";
  for (const auto& m : c.matchings) {
    for (auto v : m.one_line()) s += std::to_string(v) + ",";
    s += "|";
  }
  return s;
}

void check_band(Outcome& o, const std::map<std::string, int>& freq,
                std::size_t classes, const std::string& what) {
  require(o, freq.size() == classes,
          what + ": saw " + std::to_string(freq.size()) + " classes, expected " +
              std::to_string(classes));
  for (const auto& [k, c] : freq) {
    require(o, c >= 1800 && c <= 2200,
            what + ": class count " + std::to_string(c) + " outside [1800, 2200]");
  }
}

}  // namespace

int main() {
  report(1, "t_n, b_n and t(3,n) for n = 1..10", 1.0, [] {
    Outcome o;
    const auto t = counts({"1", "1", "2", "13", "114", "1509", "25595", "535753",
                           "13305590", "382728552"});
    const auto b = counts({"1", "1", "1", "2", "3", "6", "11", "23", "46", "98"});
    const auto c = counts({"1", "1", "5", "151", "9944", "1196991", "226435150",
                           "61992679960", "23198439767669", "11380100883484302"});
    for (std::uint64_t n = 1; n <= 10; ++n) {
      require(o, tanglegram_count(n) == t[n - 1], "t_" + std::to_string(n));
      require(o, tree_count(n) == b[n - 1], "b_" + std::to_string(n));
      require(o, chain_count(3, n) == c[n - 1], "t(3," + std::to_string(n) + ")");
    }
    return o;
  });

  report(2, "t_42 exact", 1.0, [] {
    Outcome o;
    require(o,
            to_decimal(tanglegram_count(42)) ==
                "33889136420378480492869677415186948305278176263020722832251621520063757",
            "t_42 mismatch");
    return o;
  });

  report(3, "recurrence t_1000 has 3160 digits", 60.0, [] {
    Outcome o;
    const auto digits = to_decimal(tanglegram_count_rec(1000)).size();
    require(o, digits == 3160, "got " + std::to_string(digits) + " digits");
    return o;
  });

  report(4, "direct = recurrence = mu-form; chain direct = recurrence; b_n two ways",
         30.0, [] {
    Outcome o;
    CountCache cache;
    for (std::uint64_t n = 2; n <= 60; ++n) {
      const auto direct = tanglegram_count(n);
      require(o, direct == tanglegram_count_rec(n, cache), "recurrence n=" + std::to_string(n));
      require(o, direct == tanglegram_count_mu(n), "mu-form n=" + std::to_string(n));
    }
    for (unsigned k = 1; k <= 4; ++k) {
      CountCache chain_cache;
      for (std::uint64_t n = 1; n <= 30; ++n) {
        require(o, chain_count(k, n) == chain_count_rec(k, n, chain_cache),
                "chain k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
    const auto b = tree_counts_oracle(200);
    for (std::uint64_t n = 1; n <= 200; ++n) {
      require(o, tree_count(n) == b[n], "b_" + std::to_string(n));
    }
    return o;
  });

  report(5, "brute-force oracle agreement", 300.0, [] {
    Outcome o;
    for (std::uint32_t n = 1; n <= 7; ++n) {
      require(o, ExactCount(brute_tanglegrams(n).size()) == tanglegram_count(n),
              "classes n=" + std::to_string(n));
    }
    for (std::uint32_t n = 1; n <= 6; ++n) {
      const auto trees = enumerate_trees(n);
      for (const auto& t : trees) {
        for (const auto& s : trees) {
          require(o, ExactCount(brute_pair_classes(t, s).size()) == double_coset_count(t, s),
                  "pair " + t.to_string() + " " + s.to_string());
        }
      }
    }
    for (std::uint64_t n = 4; n <= 10; ++n) {
      const auto cat = caterpillar(static_cast<std::uint32_t>(n));
      const ExactCount formula = ExactCount(n * n - n + 2) * factorial(n - 2) / 4;
      require(o, double_coset_count(cat, cat) == formula,
              "one-cherry n=" + std::to_string(n));
    }
    const std::vector<int> unordered{1, 1, 2, 10, 69, 807, 13048};
    for (std::uint32_t n = 1; n <= 7; ++n) {
      require(o, brute_unordered_count(n) == unordered[n - 1],
              "unordered n=" + std::to_string(n));
    }
    return o;
  });

  report(6, "automorphism average equals q for every binary partition, n <= 9", 0, [] {
    Outcome o;
    for (std::uint32_t n = 1; n <= 9; ++n) {
      std::map<BinaryPartition, ExactRatio> sums;
      for (const auto& t : enumerate_trees(n)) {
        const auto table = cycle_type_table(t);
        for (const auto& [lambda, c] : table.counts) {
          sums[lambda] += ExactRatio(c) / ExactRatio(table.total);
        }
      }
      for (const auto& lambda : enumerate_binary_partitions(n)) {
        require(o, sums[lambda] == q_of(lambda), "lambda=" + lambda.to_string());
      }
    }
    return o;
  });

  report(7, "r_S halving recursion at 100 random rational points, n <= 6", 0, [] {
    Outcome o;
    Rng rng(7);
    for (std::uint32_t n = 1; n <= 6; ++n) {
      std::vector<std::uint32_t> all(n);
      for (std::uint32_t i = 0; i < n; ++i) all[i] = i + 1;
      for (int point = 0; point < 100; ++point) {
        std::vector<ExactRatio> x(n), half(n);
        for (std::uint32_t i = 0; i < n; ++i) {
          x[i] = ExactRatio(static_cast<std::int64_t>(rng.uniform(401)) - 200,
                            static_cast<std::int64_t>(rng.uniform(97)) + 1);
          half[i] = x[i] / 2;
        }
        ExactRatio rhs = ExactRatio(pow(ExactCount(2), n - 1)) * r_poly(all, half);
        for (std::uint32_t mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
          std::vector<std::uint32_t> s{1}, rest;
          for (std::uint32_t i = 2; i <= n; ++i) {
            ((mask >> (i - 2)) & 1 ? s : rest).push_back(i);
          }
          rhs += r_poly(s, x) * r_poly(rest, x);
        }
        require(o, r_poly(all, x) == rhs, "n=" + std::to_string(n));
      }
    }
    return o;
  });

  report(8, "sampler uniformity bands", 60.0, [] {
    Outcome o;
    Rng rng(20240601);
    Sampler sampler;
    std::map<std::string, int> freq;
    for (int i = 0; i < 26000; ++i) {
      ++freq[class_key(canonical_rep(sampler.random_tanglegram(4, rng)))];
    }
    check_band(o, freq, 13, "tanglegrams n=4");
    freq.clear();
    for (int i = 0; i < 12000; ++i) ++freq[sampler.random_tree(6, rng).to_string()];
    check_band(o, freq, 6, "trees n=6");
    freq.clear();
    for (int i = 0; i < 10000; ++i) {
      ++freq[class_key(canonical_rep(sampler.random_chain(3, 3, rng)))];
    }
    check_band(o, freq, 5, "chains k=3 n=3");
    return o;
  });

  report(9, "asymptotic relative errors at n = 1000", 0, [] {
    Outcome o;
    const auto exact = tanglegram_count_rec(1000);
    const Real e0 = boost::multiprecision::abs(
        relative_error(t_asym(1000, 0, AsymFamily::catalan), exact));
    const Real e6 = boost::multiprecision::abs(
        relative_error(t_asym(1000, 6, AsymFamily::catalan), exact));
    require(o, e0 <= Real("1e-3"), "terms=0 error " + to_scientific(e0, 4));
    require(o, e6 <= Real("1e-12"), "terms=6 error " + to_scientific(e6, 4));
    o.detail = o.ok ? "terms=0 " + to_scientific(e0, 3) + ", terms=6 " +
                          to_scientific(e6, 3)
                    : o.detail;
    return o;
  });

  report(10, "f(1/4) to 20 digits", 0, [] {
    Outcome o;
    const std::string value = to_fixed(f_fixed_point(), 20);
    require(o, value == "0.27104169360883278703", "got " + value);
    return o;
  });

  report(
      11, "left-tree cherry mean at n = 100 in [23, 27] (conjecture probe)", 0,
      [] {
        Outcome o;
        Rng rng(11);
        const auto s = cherry_statistics(100, 10000, rng);
        std::ostringstream msg;
        msg << "sample mean " << s.mean << ", variance " << s.variance;
        require(o, s.mean >= 23 && s.mean <= 27, msg.str() + " outside [23, 27]");
        if (o.ok) o.detail = msg.str();
        return o;
      },
      true);

  std::cout << (failures == 0 ? "all hard criteria passed" : "hard criteria failed: ")
            << (failures == 0 ? "" : std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
