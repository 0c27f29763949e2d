// Copyright 2026 The tropdelta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Rank over finite prime fields by sparse elimination, and rank over the
// rationals by agreement of independent primes.

#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tropdelta/dense_integer.hpp"
#include "tropdelta/errors.hpp"
#include "tropdelta/parallel.hpp"
#include "tropdelta/sparse_matrix.hpp"

namespace tropdelta {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Rank of m over GF(p) for a prime p < 2^32.
//
// Right-looking sparse elimination. The next pivot column is one with the
// fewest remaining nonzeros; within it the shortest row is the pivot row.
// This keeps the degree product of each pivot small, which is what limits
// fill on these very sparse boundary matrices.
inline std::int64_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw InputError("rank_mod_p: modulus " + std::to_string(p) +
                     " is not a prime below 2^32");
  }
  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (col, value)
  const std::uint32_t rows = static_cast<std::uint32_t>(m.rows());
  const std::uint32_t cols = static_cast<std::uint32_t>(m.cols());
  std::vector<std::vector<Entry>> row(rows);
  std::vector<std::vector<std::uint32_t>> col_rows(cols);
  std::vector<std::int64_t> col_count(cols, 0);
  for (const auto& t : m.entries()) {
    std::int64_t v = t.value % static_cast<std::int64_t>(p);
    if (v < 0) v += static_cast<std::int64_t>(p);
    if (v == 0) continue;
    row[t.row].push_back({static_cast<std::uint32_t>(t.col), static_cast<std::uint32_t>(v)});
    col_rows[t.col].push_back(static_cast<std::uint32_t>(t.row));
    ++col_count[t.col];
  }

  using HeapItem = std::pair<std::int64_t, std::uint32_t>;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
  for (std::uint32_t c = 0; c < cols; ++c) heap.push({col_count[c], c});
  std::vector<char> row_active(rows, 1);
  std::vector<char> col_done(cols, 0);
  std::vector<std::uint32_t> touched;
  std::vector<char> touched_flag(cols, 0);
  auto touch = [&](std::uint32_t c) {
    if (!touched_flag[c]) {
      touched_flag[c] = 1;
      touched.push_back(c);
    }
  };
  auto value_in = [](const std::vector<Entry>& r, std::uint32_t c) -> std::uint32_t {
    auto it = std::lower_bound(r.begin(), r.end(), Entry{c, 0},
                               [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return (it != r.end() && it->first == c) ? it->second : 0;
  };

  std::int64_t rank = 0;
  std::vector<Entry> merged;
  std::vector<std::uint32_t> live;
  while (!heap.empty()) {
    auto [count, c] = heap.top();
    heap.pop();
    if (col_done[c] || count != col_count[c]) continue;
    col_done[c] = 1;
    if (count == 0) continue;

    live.clear();
    std::uint32_t pivot = 0;
    std::size_t best = SIZE_MAX;
    for (std::uint32_t r : col_rows[c]) {
      if (!row_active[r] || value_in(row[r], c) == 0) continue;
      if (std::find(live.begin(), live.end(), r) != live.end()) continue;
      live.push_back(r);
      if (row[r].size() < best) {
        best = row[r].size();
        pivot = r;
      }
    }
    col_rows[c].clear();
    if (live.empty()) continue;

    const auto& prow = row[pivot];
    const std::uint64_t inv = detail::pow_mod(value_in(prow, c), p - 2, p);
    for (std::uint32_t r : live) {
      if (r == pivot) continue;
      auto& target = row[r];
      const std::uint64_t factor = detail::mul_mod(value_in(target, c), inv, p);
      // target -= factor * prow
      merged.clear();
      std::size_t i = 0, j = 0;
      while (i < target.size() || j < prow.size()) {
        if (j == prow.size() || (i < target.size() && target[i].first < prow[j].first)) {
          merged.push_back(target[i++]);
        } else if (i == target.size() || prow[j].first < target[i].first) {
          const std::uint32_t col = prow[j].first;
          const std::uint64_t v = (p - detail::mul_mod(factor, prow[j].second, p)) % p;
          merged.push_back({col, static_cast<std::uint32_t>(v)});
          if (!col_done[col]) {
            col_rows[col].push_back(r);
            ++col_count[col];
            touch(col);
          }
          ++j;
        } else {
          const std::uint32_t col = prow[j].first;
          const std::uint64_t v =
              (target[i].second + p - detail::mul_mod(factor, prow[j].second, p)) % p;
          if (v != 0) {
            merged.push_back({col, static_cast<std::uint32_t>(v)});
          } else if (!col_done[col]) {
            --col_count[col];
            touch(col);
          }
          ++i;
          ++j;
        }
      }
      target.swap(merged);
    }
    row_active[pivot] = 0;
    for (const auto& [col, v] : prow) {
      if (!col_done[col]) {
        --col_count[col];
        touch(col);
      }
    }
    row[pivot].clear();
    row[pivot].shrink_to_fit();
    for (std::uint32_t t : touched) {
      touched_flag[t] = 0;
      if (!col_done[t]) heap.push({col_count[t], t});
    }
    touched.clear();
    ++rank;
  }
  return rank;
}

struct RationalRankOptions {
  std::uint64_t seed = 20260101;
  // Upper bound on primes tried before settling for the largest rank seen.
  int max_primes = 8;
  // Primes that must agree on the largest rank.
  int agreeing_primes = 2;
  // Exact fraction-free certification when min(rows, cols) is at most this
  // and the dense matrix stays small.
  std::int64_t certify_limit = 64;
  std::int64_t certify_max_entries = 1 << 20;
  int threads = thread_count();
};

struct RationalRankReport {
  std::int64_t rank = 0;
  std::vector<std::pair<std::uint64_t, std::int64_t>> prime_ranks;
  bool certified = false;
};

// Random primes in [2^30, 2^31), drawn from a seeded generator.
inline std::vector<std::uint64_t> draw_primes(std::uint64_t seed, int count) {
  std::mt19937_64 gen(seed);
  std::vector<std::uint64_t> out;
  while (static_cast<int>(out.size()) < count) {
    const std::uint64_t candidate = (std::uint64_t{1} << 30) | (gen() & ((1u << 30) - 1)) | 1;
    if (is_prime(candidate) &&
        std::find(out.begin(), out.end(), candidate) == out.end()) {
      out.push_back(candidate);
    }
  }
  return out;
}

// Rank over Q. Every modular rank is a lower bound and equals the rational
// rank for all but finitely many primes; the result is the largest modular
// rank once `agreeing_primes` primes attain it. Small matrices are certified
// by exact elimination.
inline RationalRankReport rank_rational_report(const SparseIntMatrix& m,
                                               const RationalRankOptions& opt = {}) {
  RationalRankReport report;
  const std::int64_t small = std::min(m.rows(), m.cols());
  if (small == 0 || m.is_zero()) {
    report.certified = true;
    return report;
  }
  const auto primes = draw_primes(opt.seed, opt.max_primes);
  std::size_t next = 0;
  const int first_batch = std::min(opt.agreeing_primes, opt.max_primes);
  if (opt.threads > 1 && first_batch > 1) {
    std::vector<std::future<std::int64_t>> futures;
    for (int i = 0; i < first_batch; ++i) {
      futures.push_back(std::async(std::launch::async,
                                   [&m, p = primes[i]] { return rank_mod_p(m, p); }));
    }
    for (int i = 0; i < first_batch; ++i) report.prime_ranks.push_back({primes[i], futures[i].get()});
  } else {
    for (int i = 0; i < first_batch; ++i) {
      report.prime_ranks.push_back({primes[i], rank_mod_p(m, primes[i])});
    }
  }
  next = first_batch;
  auto settled = [&] {
    std::int64_t best = 0;
    for (auto [p, r] : report.prime_ranks) best = std::max(best, r);
    int hits = 0;
    for (auto [p, r] : report.prime_ranks) hits += (r == best);
    report.rank = best;
    return hits >= opt.agreeing_primes;
  };
  while (!settled() && next < primes.size()) {
    report.prime_ranks.push_back({primes[next], rank_mod_p(m, primes[next])});
    ++next;
  }
  if (small <= opt.certify_limit &&
      static_cast<std::int64_t>(m.rows()) * m.cols() <= opt.certify_max_entries) {
    const std::int64_t exact = bareiss_rank(m);
    if (exact != report.rank) {
      throw ContractViolation("rank_rational: modular rank " + std::to_string(report.rank) +
                              " disagrees with exact rank " + std::to_string(exact));
    }
    report.certified = true;
  }
  return report;
}

inline std::int64_t rank_rational(const SparseIntMatrix& m,
                                  const RationalRankOptions& opt = {}) {
  return rank_rational_report(m, opt).rank;
}

}  // namespace tropdelta
