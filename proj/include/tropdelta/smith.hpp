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

// Smith normal form over the integers, and a gcd-of-minors oracle for
// small matrices.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "tropdelta/dense_integer.hpp"
#include "tropdelta/errors.hpp"
#include "tropdelta/sparse_matrix.hpp"

namespace tropdelta {

struct SnfResult {
  // Nonzero invariant factors d1 | d2 | ... | dr, all positive.
  std::vector<BigInt> factors;
  std::int64_t rank = 0;

  std::int64_t count_equal(const BigInt& d) const {
    return std::count(factors.begin(), factors.end(), d);
  }
  // Factors greater than one, i.e. the torsion of the cokernel.
  std::vector<BigInt> torsion() const {
    std::vector<BigInt> out;
    for (const auto& d : factors) {
      if (d > 1) out.push_back(d);
    }
    return out;
  }
  friend bool operator==(const SnfResult&, const SnfResult&) = default;
};

inline std::string to_string(const SnfResult& s) {
  std::string out = "(";
  std::size_t i = 0;
  while (i < s.factors.size()) {
    std::size_t j = i;
    while (j < s.factors.size() && s.factors[j] == s.factors[i]) ++j;
    if (i > 0) out += ", ";
    out += s.factors[i].str();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

namespace detail {

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Turns a list of nonzero diagonal entries into invariant factors using
// diag(a, b) ~ diag(gcd(a, b), lcm(a, b)).
inline std::vector<BigInt> normalize_diagonal(std::vector<BigInt> d) {
  for (auto& x : d) x = big_abs(x);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      const BigInt g = boost::multiprecision::gcd(d[i], d[j]);
      const BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Diagonalizes a dense matrix in place with unimodular row and column
// operations and returns the nonzero diagonal entries.
inline std::vector<BigInt> dense_diagonalize(DenseBigMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block as pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (pi == rows || big_abs(a[i][j]) < big_abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    for (;;) {
      std::swap(a[t], a[pi]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) {
          if (a[t][j] != 0) a[i][j] -= q * a[t][j];
        }
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) {
          if (a[i][t] != 0) a[i][j] -= q * a[i][t];
        }
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
      // A remainder smaller than the pivot is left in row or column t.
      pi = t;
      pj = t;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] != 0 && big_abs(a[i][t]) < big_abs(a[pi][pj])) {
          pi = i;
          pj = t;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] != 0 && big_abs(a[t][j]) < big_abs(a[pi][pj])) {
          pi = t;
          pj = j;
        }
      }
    }
    diag.push_back(a[t][t]);
  }
  return diag;
}

}  // namespace detail

struct SnfOptions {
  // Largest min(rows, cols) accepted for the dense remainder.
  std::int64_t cap = 5000;
};

// Smith normal form by integer elimination. A sparse phase pivots on unit
// entries (each contributes an invariant factor 1 and removes one row and
// one column), choosing the column with fewest nonzeros and then the
// shortest row. The remaining block is diagonalized densely with
// arbitrary-precision entries.
inline SnfResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opt = {}) {
  if (std::min(m.rows(), m.cols()) > opt.cap) {
    throw ResourceError("smith_normal_form: matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", above the cap of " +
                        std::to_string(opt.cap) + "; use rank_rational for the rank");
  }
  using Entry = std::pair<std::int32_t, BigInt>;  // (col, value)
  const std::int32_t rows = m.rows();
  const std::int32_t cols = m.cols();
  std::vector<std::vector<Entry>> row(rows);
  std::vector<std::vector<std::int32_t>> col_rows(cols);
  std::vector<std::int64_t> col_count(cols, 0);
  for (const auto& t : m.entries()) {
    row[t.row].push_back({t.col, BigInt(t.value)});
    col_rows[t.col].push_back(t.row);
    ++col_count[t.col];
  }
  auto value_in = [](const std::vector<Entry>& r, std::int32_t c) -> const BigInt* {
    auto it = std::lower_bound(r.begin(), r.end(), c,
                               [](const Entry& e, std::int32_t x) { return e.first < x; });
    return (it != r.end() && it->first == c) ? &it->second : nullptr;
  };

  using HeapItem = std::pair<std::int64_t, std::int32_t>;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
  for (std::int32_t c = 0; c < cols; ++c) heap.push({col_count[c], c});
  std::vector<char> row_active(rows, 1);
  std::vector<char> col_done(cols, 0);
  std::vector<std::int32_t> touched;
  std::vector<char> touched_flag(cols, 0);
  auto touch = [&](std::int32_t c) {
    if (!touched_flag[c]) {
      touched_flag[c] = 1;
      touched.push_back(c);
    }
  };

  std::int64_t unit_pivots = 0;
  std::vector<Entry> merged;
  std::vector<std::int32_t> live;
  while (!heap.empty()) {
    auto [count, c] = heap.top();
    heap.pop();
    if (col_done[c] || count != col_count[c] || count == 0) continue;
    live.clear();
    std::int32_t pivot = -1;
    for (std::int32_t r : col_rows[c]) {
      if (!row_active[r] || value_in(row[r], c) == nullptr) continue;
      if (std::find(live.begin(), live.end(), r) != live.end()) continue;
      live.push_back(r);
      const BigInt& v = *value_in(row[r], c);
      if ((v == 1 || v == -1) && (pivot < 0 || row[r].size() < row[pivot].size())) pivot = r;
    }
    col_rows[c] = live;
    // Without a unit the column waits; fill may give it one later.
    if (pivot < 0) continue;

    const auto& prow = row[pivot];
    const BigInt pval = *value_in(prow, c);
    for (std::int32_t r : live) {
      if (r == pivot) continue;
      auto& target = row[r];
      const BigInt factor = *value_in(target, c) * pval;  // pval is its own inverse
      merged.clear();
      std::size_t i = 0, j = 0;
      while (i < target.size() || j < prow.size()) {
        if (j == prow.size() || (i < target.size() && target[i].first < prow[j].first)) {
          merged.push_back(std::move(target[i++]));
        } else if (i == target.size() || prow[j].first < target[i].first) {
          const std::int32_t col = prow[j].first;
          merged.push_back({col, -factor * prow[j].second});
          if (!col_done[col]) {
            col_rows[col].push_back(r);
            ++col_count[col];
            touch(col);
          }
          ++j;
        } else {
          const std::int32_t col = prow[j].first;
          BigInt v = target[i].second - factor * prow[j].second;
          if (v == 0 && !col_done[col]) --col_count[col];
          if (v != 0) merged.push_back({col, std::move(v)});
          if (!col_done[col]) touch(col);
          ++i;
          ++j;
        }
      }
      target.swap(merged);
    }
    // Column c now holds only the unit pivot, so column operations clear the
    // rest of the pivot row without touching other rows.
    row_active[pivot] = 0;
    col_done[c] = 1;
    for (const auto& [col, v] : prow) {
      if (!col_done[col]) {
        --col_count[col];
        touch(col);
      }
    }
    row[pivot].clear();
    for (std::int32_t t : touched) {
      touched_flag[t] = 0;
      if (!col_done[t]) heap.push({col_count[t], t});
    }
    touched.clear();
    ++unit_pivots;
  }

  std::vector<std::int32_t> rest_rows;
  std::vector<std::int32_t> col_index(cols, -1);
  std::int32_t rest_cols = 0;
  for (std::int32_t r = 0; r < rows; ++r) {
    if (row_active[r] && !row[r].empty()) rest_rows.push_back(r);
  }
  for (std::int32_t c = 0; c < cols; ++c) {
    if (!col_done[c] && col_count[c] > 0) col_index[c] = rest_cols++;
  }
  DenseBigMatrix dense(rest_rows.size(), std::vector<BigInt>(rest_cols));
  for (std::size_t i = 0; i < rest_rows.size(); ++i) {
    for (const auto& [col, v] : row[rest_rows[i]]) dense[i][col_index[col]] = v;
  }
  std::vector<BigInt> diag = detail::dense_diagonalize(dense);
  SnfResult out;
  out.factors.assign(static_cast<std::size_t>(unit_pivots), BigInt(1));
  for (auto& d : detail::normalize_diagonal(std::move(diag))) out.factors.push_back(std::move(d));
  out.rank = static_cast<std::int64_t>(out.factors.size());
  return out;
}

// Invariant factors from determinantal divisors: d1...dk is the gcd of all
// k x k minors. Exponential in the size, so only for tiny matrices.
inline SnfResult snf_oracle_minors(const SparseIntMatrix& m) {
  constexpr std::int32_t kOracleCap = 8;
  if (std::min(m.rows(), m.cols()) > kOracleCap || std::max(m.rows(), m.cols()) > 16) {
    throw ResourceError("snf_oracle_minors: matrix " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " exceeds the oracle cap");
  }
  const auto a = to_dense_big(m);
  auto subsets = [](std::int32_t total, std::int32_t k) {
    std::vector<std::vector<std::int32_t>> out;
    std::vector<std::int32_t> idx(k);
    std::function<void(std::int32_t, std::int32_t)> rec = [&](std::int32_t start, std::int32_t depth) {
      if (depth == k) {
        out.push_back(idx);
        return;
      }
      for (std::int32_t i = start; i < total; ++i) {
        idx[depth] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
    return out;
  };
  SnfResult out;
  BigInt prev = 1;
  for (std::int32_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    BigInt g = 0;
    for (const auto& rs : subsets(m.rows(), k)) {
      for (const auto& cs : subsets(m.cols(), k)) {
        DenseBigMatrix minor(k, std::vector<BigInt>(k));
        for (std::int32_t i = 0; i < k; ++i) {
          for (std::int32_t j = 0; j < k; ++j) minor[i][j] = a[rs[i]][cs[j]];
        }
        g = boost::multiprecision::gcd(g, detail::big_abs(bareiss_determinant(std::move(minor))));
      }
    }
    if (g == 0) break;
    out.factors.push_back(g / prev);
    prev = g;
  }
  out.rank = static_cast<std::int64_t>(out.factors.size());
  return out;
}

}  // namespace tropdelta
