#pragma once

// Independent reference computations for the tests. Nothing here goes through
// qtile's series arithmetic or tiling enumerator.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qtile/series.hpp"

namespace oracle {

// (q, z) -> coefficient, zeros never stored.
using Poly = std::map<std::pair<std::size_t, std::size_t>, long long>;

inline void prune(Poly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline Poly mul(const Poly& a, const Poly& b, std::size_t qmax) {
  Poly out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      if (ka.first + kb.first > qmax) continue;
      out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    }
  }
  prune(out);
  return out;
}

inline Poly from_series(const qtile::Series& s) {
  Poly p;
  for (const auto& t : s.terms()) p[{t.q, t.z}] = t.c.convert_to<long long>();
  return p;
}

// Every subset of {1..qmax} with sum <= qmax, counted by (sum, size).
inline Poly distinct_parts_by_subsets(std::size_t qmax) {
  Poly p;
  const std::uint64_t limit = std::uint64_t{1} << qmax;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::size_t sum = 0, count = 0;
    for (std::size_t bit = 0; bit < qmax && sum <= qmax; ++bit) {
      if (mask >> bit & 1) {
        sum += bit + 1;
        ++count;
      }
    }
    if (sum <= qmax) p[{sum, count}] += 1;
  }
  return p;
}

inline std::vector<std::vector<std::size_t>> subsets_with_sum_at_most(std::size_t qmax) {
  std::vector<std::vector<std::size_t>> out;
  const std::uint64_t limit = std::uint64_t{1} << qmax;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<std::size_t> s;
    std::size_t sum = 0;
    for (std::size_t bit = 0; bit < qmax; ++bit) {
      if (mask >> bit & 1) {
        s.push_back(bit + 1);
        sum += bit + 1;
      }
    }
    if (sum <= qmax) out.push_back(std::move(s));
  }
  return out;
}

// Polynomials in q alone given as exponent -> coefficient.
inline Poly univariate(std::initializer_list<std::pair<std::size_t, long long>> terms) {
  Poly p;
  for (auto [q, c] : terms) p[{q, 0}] += c;
  prune(p);
  return p;
}

// prod_{j=1..n} (1 - q^j) expanded naively.
inline Poly q_pochhammer(std::size_t n, std::size_t qmax) {
  Poly acc{{{0, 0}, 1}};
  for (std::size_t j = 1; j <= n; ++j) acc = mul(acc, univariate({{0, 1}, {j, -1}}), qmax);
  return acc;
}

// Number of partitions of each n <= qmax into parts from {1..n_parts}, by recursion.
inline long long restricted_partitions(std::size_t n, std::size_t max_part) {
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  long long total = restricted_partitions(n, max_part - 1);
  if (n >= max_part) total += restricted_partitions(n - max_part, max_part);
  return total;
}

// Least m with b(km) <= lm computed on a raw position list.
inline std::size_t kl_rank(const std::vector<std::size_t>& pos, std::size_t k, std::size_t l) {
  for (std::size_t m = 0;; ++m) {
    std::size_t b = 0;
    for (auto p : pos) b += p > k * m;
    if (b <= l * m) return m;
  }
}

}  // namespace oracle
