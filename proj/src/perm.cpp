#include "tangle/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tangle {

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_line(std::span<const std::uint32_t> one_line) {
  const std::size_t n = one_line.size();
  std::vector<std::uint32_t> img(n);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t v = one_line[i];
    if (v < 1 || v > n || hit[v - 1]) {
      throw std::invalid_argument("one-line notation is not a permutation");
    }
    hit[v - 1] = true;
    img[i] = v - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_line(
    std::initializer_list<std::uint32_t> one_line) {
  return from_one_line(
      std::span<const std::uint32_t>(one_line.begin(), one_line.size()));
}

Permutation Permutation::from_cycles(
    std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::uint32_t a = cycle[i];
      const std::uint32_t b = cycle[(i + 1) % cycle.size()];
      if (a < 1 || a > n || b < 1 || b > n || used[a - 1]) {
        throw std::invalid_argument("cycles are not disjoint within 1..n");
      }
      used[a - 1] = true;
      img[a - 1] = b - 1;
    }
  }
  return Permutation(std::move(img));
}

std::vector<std::uint32_t> Permutation::one_line() const {
  std::vector<std::uint32_t> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    inv[img_[i]] = static_cast<std::uint32_t>(i);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t start = 0; start < img_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t x = start; !seen[x]; x = img_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::uint64_t> Permutation::cycle_type() const {
  std::vector<std::uint64_t> out;
  for (const auto& c : cycles()) out.push_back(c.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Permutation Permutation::embedded(std::size_t offset, std::size_t n) const {
  if (offset + img_.size() > n) {
    throw std::invalid_argument("embedding does not fit");
  }
  auto out = identity(n);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    out.img_[offset + i] = static_cast<std::uint32_t>(offset + img_[i]);
  }
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("compose: permutations of different sizes");
  }
  std::vector<std::uint32_t> one(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) one[i] = a.at(b.at(i)) + 1;
  return Permutation::from_one_line(one);
}

Permutation flip(std::size_t k) {
  std::vector<std::uint32_t> one(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    one[i] = static_cast<std::uint32_t>(i + k + 1);
    one[i + k] = static_cast<std::uint32_t>(i + 1);
  }
  return Permutation::from_one_line(one);
}

Permutation interleave(const Permutation& w1, const Permutation& w2,
                       std::size_t k) {
  if (w1.size() != 2 * k || w2.size() != 2 * k) {
    throw std::invalid_argument("interleave: permutations must have size 2k");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (w1.at(k + i) != k + i) {
      throw std::invalid_argument("interleave: w1 moves a point outside [1,k]");
    }
    if (w2.at(i) != i) {
      throw std::invalid_argument(
          "interleave: w2 moves a point outside [k+1,2k]");
    }
  }
  const Permutation pi = flip(k);
  return compose(pi, compose(w1, compose(pi, compose(w1.inverse(),
                                                     compose(pi, w2)))));
}

Permutation sample_conjugator(const Permutation& u, const Permutation& v,
                              Rng& rng) {
  if (u.size() != v.size() || u.cycle_type() != v.cycle_type()) {
    throw std::invalid_argument("sample_conjugator: cycle types differ");
  }
  std::map<std::size_t, std::vector<std::vector<std::uint32_t>>> by_len_u;
  std::map<std::size_t, std::vector<std::vector<std::uint32_t>>> by_len_v;
  for (auto& c : u.cycles()) by_len_u[c.size()].push_back(std::move(c));
  for (auto& c : v.cycles()) by_len_v[c.size()].push_back(std::move(c));

  std::vector<std::uint32_t> one(u.size());
  for (auto& [len, v_cycles] : by_len_v) {
    auto& u_cycles = by_len_u[len];
    // Fisher-Yates over u's cycles gives the uniform bijection.
    for (std::size_t i = u_cycles.size(); i > 1; --i) {
      std::swap(u_cycles[i - 1], u_cycles[rng.uniform(i)]);
    }
    for (std::size_t j = 0; j < v_cycles.size(); ++j) {
      const auto& a = v_cycles[j];
      const auto& b = u_cycles[j];
      const std::size_t shift = rng.uniform(len);
      // w(a_i) = b_{i+shift} so that w v w^{-1} sends b_i to b_{i+1}.
      for (std::size_t i = 0; i < len; ++i) {
        one[a[i]] = b[(i + shift) % len] + 1;
      }
    }
  }
  return Permutation::from_one_line(one);
}

Permutation double_coset_min(const Permutation& v,
                             std::span<const Permutation> pre,
                             std::span<const Permutation> post) {
  const std::size_t n = v.size();
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> cand(n);
  for (const auto& q : post) {
    for (const auto& p : pre) {
      for (std::size_t i = 0; i < n; ++i) cand[i] = p.at(v.at(q.at(i))) + 1;
      if (best.empty() || cand < best) best = cand;
    }
  }
  if (best.empty()) return v;
  return Permutation::from_one_line(best);
}

std::uint64_t rank(const Permutation& p) {
  const std::size_t n = p.size();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.at(j) < p.at(i)) ++smaller;
    }
    r = r * (n - i) + smaller;
  }
  return r;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::uint32_t> one(n);
  std::iota(one.begin(), one.end(), 1u);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(one));
  } while (std::next_permutation(one.begin(), one.end()));
  return out;
}

}  // namespace tangle
