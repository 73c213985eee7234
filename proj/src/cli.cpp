#include "tangle/cli.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "tangle/asym.hpp"
#include "tangle/enumerate.hpp"
#include "tangle/oracle.hpp"
#include "tangle/sample.hpp"

namespace tangle::cli {

namespace {

struct Options {
  std::uint64_t n = 0;
  unsigned k = 2;
  std::string method;
  std::string kind;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  std::string format = "json";
  unsigned terms = 0;
  std::string family = "a";
  unsigned precision = kDefaultPrecisionBits;
  unsigned digits = 20;
  std::string constant;
  std::uint64_t samples = 0;
  std::string pattern;
  bool unordered = false;
  bool list = false;
  std::uint32_t max_n = 0;
};

unsigned decimal_digits(unsigned bits) {
  // Digits that the binary precision fully determines, less a guard digit.
  const auto d = static_cast<unsigned>(std::floor(bits * 0.30102999566398120));
  return d > 2 ? d - 2 : 1;
}

std::uint32_t checked_u32(std::uint64_t n) {
  if (n == 0 || n > 0xffffffffULL) {
    throw std::invalid_argument("--n must be between 1 and 2^32 - 1");
  }
  return static_cast<std::uint32_t>(n);
}

std::uint32_t oracle_cap(const Options& o, std::ostream& err) {
  if (o.max_n == 0) return kOracleCap;
  if (o.max_n > kOracleCap) {
    err << "warning: raising the oracle cap to " << o.max_n
        << "; brute force grows like n! and may run for a long time\n";
  }
  return o.max_n;
}

int do_count(const std::string& what, const Options& o, std::ostream& out) {
  if (o.n == 0) throw std::invalid_argument("--n must be >= 1");
  ExactCount value;
  if (what == "tanglegrams") {
    if (o.method.empty() || o.method == "direct") {
      value = tanglegram_count(o.n);
    } else if (o.method == "recurrence") {
      value = tanglegram_count_rec(o.n);
    } else if (o.method == "mu") {
      value = o.n == 1 ? tanglegram_count(1) : tanglegram_count_mu(o.n);
    } else {
      throw std::invalid_argument("unknown --method " + o.method);
    }
  } else if (what == "trees") {
    if (o.method.empty() || o.method == "direct") {
      value = tree_count(o.n);
    } else if (o.method == "oracle") {
      value = tree_count_oracle(o.n);
    } else {
      throw std::invalid_argument("unknown --method " + o.method);
    }
  } else {
    if (o.k == 0) throw std::invalid_argument("--k must be >= 1");
    if (o.method.empty() || o.method == "direct") {
      value = chain_count(o.k, o.n);
    } else if (o.method == "recurrence") {
      value = chain_count_rec(o.k, o.n);
    } else {
      throw std::invalid_argument("unknown --method " + o.method);
    }
  }
  out << to_decimal(value) << '\n';
  return kExitOk;
}

std::string join_one_line(const Permutation& p) {
  std::string s;
  for (auto v : p.one_line()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

int do_sample(const Options& o, std::ostream& out) {
  const std::uint32_t n = checked_u32(o.n);
  if (o.format != "json" && o.format != "text") {
    throw std::invalid_argument("--format must be json or text");
  }
  const bool json = o.format == "json";
  Rng rng(o.seed);
  Sampler sampler;
  for (std::uint64_t i = 0; i < o.count; ++i) {
    if (o.kind == "tanglegram") {
      const Tanglegram t = sampler.random_tanglegram(n, rng);
      if (json) {
        out << to_json(t).dump() << '\n';
      } else {
        out << t.left.to_string() << ' ' << t.right.to_string() << " : "
            << join_one_line(t.matching) << '\n';
      }
    } else if (o.kind == "tree") {
      const CanonicalTree t = sampler.random_tree(n, rng);
      if (json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["tree"] = t.to_string();
        out << j.dump() << '\n';
      } else {
        out << t.to_string() << '\n';
      }
    } else {
      if (o.k == 0) throw std::invalid_argument("--k must be >= 1");
      const TangledChain c = sampler.random_chain(o.k, n, rng);
      if (json) {
        out << to_json(c).dump() << '\n';
      } else {
        for (std::size_t j = 0; j < c.trees.size(); ++j) {
          out << (j ? " " : "") << c.trees[j].to_string();
        }
        for (const auto& m : c.matchings) out << " : " << join_one_line(m);
        out << '\n';
      }
    }
  }
  return kExitOk;
}

int do_asym(const Options& o, std::ostream& out) {
  if (o.family != "a" && o.family != "b") {
    throw std::invalid_argument("--family must be a or b");
  }
  const AsymFamily family =
      o.family == "a" ? AsymFamily::catalan : AsymFamily::stirling;
  const Real approx = t_asym(o.n, o.terms, family, o.precision);
  out << to_scientific(approx, decimal_digits(o.precision)) << '\n';
  if (o.n <= 2000) {
    const Real err = relative_error(approx, tanglegram_count_rec(o.n), o.precision);
    out << "relative_error " << to_scientific(err, 6) << '\n';
  }
  return kExitOk;
}

int do_const(const Options& o, std::ostream& out) {
  if (o.constant != "f-quarter") {
    throw std::invalid_argument("unknown constant " + o.constant);
  }
  if (o.digits > decimal_digits(o.precision)) {
    throw std::invalid_argument("--digits exceeds what --precision supports (" +
                                std::to_string(decimal_digits(o.precision)) +
                                ")");
  }
  out << to_fixed(f_fixed_point(o.precision), o.digits) << '\n';
  return kExitOk;
}

int do_stats(const std::string& what, const Options& o, std::ostream& out) {
  const std::uint32_t n = checked_u32(o.n);
  Rng rng(o.seed);
  OccurrenceSummary s;
  if (what == "cherries") {
    s = cherry_statistics(n, o.samples, rng);
  } else {
    if (o.pattern.empty()) throw std::invalid_argument("--pattern is required");
    s = pattern_statistics(CanonicalTree::parse(o.pattern), n, o.samples, rng);
  }
  auto j = to_json(s);
  j["seed"] = o.seed;
  out << j.dump() << '\n';
  return kExitOk;
}

int do_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const std::uint32_t n = checked_u32(o.n);
  const std::uint32_t cap = oracle_cap(o, err);
  if (o.unordered) {
    out << to_decimal(brute_unordered_count(n, cap)) << '\n';
    return kExitOk;
  }
  const auto classes = brute_tanglegrams(n, cap);
  out << classes.size() << '\n';
  if (o.list) {
    for (const auto& t : classes) out << to_json(t).dump() << '\n';
  }
  return kExitOk;
}

int do_table(const std::string& what, const Options& o, std::ostream& out,
             std::ostream& err) {
  if (what != "paper") throw std::invalid_argument("unknown table " + what);
  const std::uint32_t cap = oracle_cap(o, err);
  out << std::left << std::setw(4) << "n" << std::setw(12) << "t_n"
      << std::setw(6) << "b_n" << std::setw(20) << "t(3,n)" << std::setw(14)
      << "rooted ord." << "rooted unord." << '\n';
  for (std::uint32_t n = 1; n <= 10; ++n) {
    std::string ord = "-";
    std::string unord = "-";
    if (n <= cap) {
      ord = std::to_string(brute_tanglegrams(n, cap).size());
      unord = to_decimal(brute_unordered_count(n, cap));
    }
    out << std::setw(4) << n << std::setw(12) << to_decimal(tanglegram_count(n))
        << std::setw(6) << to_decimal(tree_count(n)) << std::setw(20)
        << to_decimal(chain_count(3, n)) << std::setw(14) << ord << unord
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact counts and uniform sampling of tanglegrams, binary trees "
               "and tangled chains",
               "tangle"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Exact counts");
  count->require_subcommand(1);
  auto* count_t = count->add_subcommand("tanglegrams", "t_n");
  count_t->add_option("--n", o.n, "Size")->required();
  count_t->add_option("--method", o.method, "direct|recurrence|mu");
  auto* count_b = count->add_subcommand("trees", "b_n");
  count_b->add_option("--n", o.n, "Leaves")->required();
  count_b->add_option("--method", o.method, "direct|oracle");
  auto* count_c = count->add_subcommand("chains", "t(k, n)");
  count_c->add_option("--k", o.k, "Chain length")->required();
  count_c->add_option("--n", o.n, "Leaves per tree")->required();
  count_c->add_option("--method", o.method, "direct|recurrence");

  auto* sample = app.add_subcommand("sample", "Uniform random objects");
  sample->add_option("kind", o.kind, "tanglegram|tree|chain")
      ->required()
      ->check(CLI::IsMember({"tanglegram", "tree", "chain"}));
  sample->add_option("--n", o.n, "Size")->required();
  sample->add_option("--k", o.k, "Chain length (chain only)");
  sample->add_option("--seed", o.seed, "RNG seed")->required();
  sample->add_option("--count", o.count, "Number of samples");
  sample->add_option("--format", o.format, "json|text");

  auto* asym = app.add_subcommand("asym", "Asymptotic estimate of t_n");
  asym->add_option("--n", o.n, "Size")->required();
  asym->add_option("--terms", o.terms, "Series terms, 0..6")->required();
  asym->add_option("--family", o.family, "a|b")->required();
  asym->add_option("--precision", o.precision, "Bits");

  auto* constant = app.add_subcommand("const", "Constants");
  constant->add_option("name", o.constant, "f-quarter")->required();
  constant->add_option("--precision", o.precision, "Bits");
  constant->add_option("--digits", o.digits,
                       "Digits after the point, rounded (default 20)");

  auto* stats = app.add_subcommand("stats", "Subtree statistics of samples");
  stats->require_subcommand(1);
  auto* stats_c = stats->add_subcommand("cherries", "Cherries in left trees");
  auto* stats_p = stats->add_subcommand("pattern", "Copies of a pattern tree");
  for (auto* s : {stats_c, stats_p}) {
    s->add_option("--n", o.n, "Size")->required();
    s->add_option("--samples", o.samples, "Number of tanglegrams")->required();
    s->add_option("--seed", o.seed, "RNG seed")->required();
  }
  stats_p->add_option("--pattern", o.pattern, "Tree string")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration");
  oracle->require_subcommand(1);
  auto* oracle_t = oracle->add_subcommand("tanglegrams", "Tanglegram classes");
  oracle_t->add_option("--n", o.n, "Size")->required();
  oracle_t->add_flag("--unordered", o.unordered, "Count unordered classes");
  oracle_t->add_flag("--list", o.list, "Print one class per line");
  oracle_t->add_option("--max-n", o.max_n, "Override the size cap");

  auto* table = app.add_subcommand("table", "Reference tables");
  std::string table_name;
  table->add_option("name", table_name, "paper")->required();
  table->add_option("--max-n", o.max_n, "Override the oracle cap");

  std::vector<const char*> argv{"tangle"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (count->parsed()) {
      const std::string what = count_t->parsed()   ? "tanglegrams"
                               : count_b->parsed() ? "trees"
                                                   : "chains";
      return do_count(what, o, out);
    }
    if (sample->parsed()) return do_sample(o, out);
    if (asym->parsed()) return do_asym(o, out);
    if (constant->parsed()) return do_const(o, out);
    if (stats->parsed()) return do_stats(stats_c->parsed() ? "cherries" : "pattern", o, out);
    if (oracle->parsed()) return do_oracle(o, out, err);
    if (table->parsed()) return do_table(table_name, o, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tangle::cli
