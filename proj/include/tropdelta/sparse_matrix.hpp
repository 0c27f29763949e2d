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

#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropdelta/errors.hpp"

namespace tropdelta {

struct Triplet {
  std::int32_t row = 0;
  std::int32_t col = 0;
  std::int64_t value = 0;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Exact integer matrix in triplet form, sorted column-major, with no
// duplicate positions and no stored zeros.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::int32_t rows, std::int32_t cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("SparseIntMatrix: negative shape");
  }

  // Sums duplicate positions and drops zeros.
  static SparseIntMatrix from_triplets(std::int32_t rows, std::int32_t cols,
                                       std::vector<Triplet> entries) {
    SparseIntMatrix m(rows, cols);
    for (const auto& t : entries) {
      if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
        throw InputError("SparseIntMatrix: entry (" + std::to_string(t.row) +
                         ", " + std::to_string(t.col) + ") outside " +
                         std::to_string(rows) + "x" + std::to_string(cols));
      }
    }
    std::sort(entries.begin(), entries.end(), column_major_less);
    for (const auto& t : entries) {
      if (!m.entries_.empty() && m.entries_.back().row == t.row &&
          m.entries_.back().col == t.col) {
        m.entries_.back().value += t.value;
      } else {
        m.entries_.push_back(t);
      }
    }
    std::erase_if(m.entries_, [](const Triplet& t) { return t.value == 0; });
    return m;
  }

  static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& a) {
    const auto rows = static_cast<std::int32_t>(a.size());
    const auto cols = rows == 0 ? 0 : static_cast<std::int32_t>(a[0].size());
    std::vector<Triplet> t;
    for (std::int32_t i = 0; i < rows; ++i) {
      if (static_cast<std::int32_t>(a[i].size()) != cols) {
        throw InputError("SparseIntMatrix::from_dense: ragged rows");
      }
      for (std::int32_t j = 0; j < cols; ++j) {
        if (a[i][j] != 0) t.push_back({i, j, a[i][j]});
      }
    }
    return from_triplets(rows, cols, std::move(t));
  }

  static SparseIntMatrix identity(std::int32_t k) {
    std::vector<Triplet> t;
    for (std::int32_t i = 0; i < k; ++i) t.push_back({i, i, 1});
    return from_triplets(k, k, std::move(t));
  }

  std::int32_t rows() const { return rows_; }
  std::int32_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Triplet>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  std::vector<std::vector<std::int64_t>> to_dense() const {
    std::vector<std::vector<std::int64_t>> a(rows_, std::vector<std::int64_t>(cols_, 0));
    for (const auto& t : entries_) a[t.row][t.col] = t.value;
    return a;
  }

  // Nonzero count per column.
  std::vector<std::int32_t> column_counts() const {
    std::vector<std::int32_t> c(cols_, 0);
    for (const auto& t : entries_) ++c[t.col];
    return c;
  }

  std::int64_t max_abs_entry() const {
    std::int64_t m = 0;
    for (const auto& t : entries_) m = std::max(m, t.value < 0 ? -t.value : t.value);
    return m;
  }

  SparseIntMatrix transpose() const {
    std::vector<Triplet> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
    return from_triplets(cols_, rows_, std::move(t));
  }

  // Appends columns of `other` (same row count) on the right.
  SparseIntMatrix append_columns(const SparseIntMatrix& other) const {
    if (other.rows_ != rows_) throw InputError("append_columns: row count mismatch");
    std::vector<Triplet> t = entries_;
    for (const auto& e : other.entries_) t.push_back({e.row, e.col + cols_, e.value});
    return from_triplets(rows_, cols_ + other.cols_, std::move(t));
  }

  // Permutes rows and columns (new index = perm[old]) and flips signs.
  SparseIntMatrix permuted(const std::vector<std::int32_t>& row_perm,
                           const std::vector<std::int32_t>& col_perm,
                           const std::vector<int>& row_sign,
                           const std::vector<int>& col_sign) const {
    std::vector<Triplet> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) {
      t.push_back({row_perm[e.row], col_perm[e.col],
                   e.value * row_sign[e.row] * col_sign[e.col]});
    }
    return from_triplets(rows_, cols_, std::move(t));
  }

  // this * rhs.
  SparseIntMatrix multiply(const SparseIntMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
      throw InputError("multiply: shape mismatch " + std::to_string(rows_) + "x" +
                       std::to_string(cols_) + " * " + std::to_string(rhs.rows_) +
                       "x" + std::to_string(rhs.cols_));
    }
    // Column k of this, as (row, value) lists.
    std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> by_col(cols_);
    for (const auto& e : entries_) by_col[e.col].push_back({e.row, e.value});
    std::vector<Triplet> out;
    std::unordered_map<std::int32_t, std::int64_t> acc;
    std::size_t i = 0;
    const auto& r = rhs.entries_;
    while (i < r.size()) {
      const std::int32_t j = r[i].col;
      acc.clear();
      for (; i < r.size() && r[i].col == j; ++i) {
        for (auto [row, v] : by_col[r[i].row]) acc[row] += v * r[i].value;
      }
      for (auto [row, v] : acc) {
        if (v != 0) out.push_back({row, j, v});
      }
    }
    return from_triplets(rows_, rhs.cols_, std::move(out));
  }

  // Plain-text triplet format: "ROWS COLS M", then one "i j v" line per
  // nonzero (1-based, column-major), then "0 0 0".
  void write_triplets(std::ostream& os) const {
    os << rows_ << ' ' << cols_ << ' ' << entries_.size() << '\n';
    for (const auto& t : entries_) {
      os << (t.row + 1) << ' ' << (t.col + 1) << ' ' << t.value << '\n';
    }
    os << "0 0 0\n";
  }

  std::string to_triplet_text() const {
    std::ostringstream os;
    write_triplets(os);
    return os.str();
  }

  static SparseIntMatrix read_triplets(std::istream& is) {
    std::int64_t rows = 0, cols = 0, count = 0;
    if (!(is >> rows >> cols >> count) || rows < 0 || cols < 0 || count < 0) {
      throw InputError("read_triplets: bad header");
    }
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(count));
    for (;;) {
      std::int64_t i = 0, j = 0, v = 0;
      if (!(is >> i >> j >> v)) throw InputError("read_triplets: missing terminator");
      if (i == 0 && j == 0 && v == 0) break;
      if (i < 1 || j < 1 || v == 0) throw InputError("read_triplets: bad entry line");
      t.push_back({static_cast<std::int32_t>(i - 1), static_cast<std::int32_t>(j - 1), v});
    }
    if (static_cast<std::int64_t>(t.size()) != count) {
      throw InputError("read_triplets: header promises " + std::to_string(count) +
                       " entries, found " + std::to_string(t.size()));
    }
    return from_triplets(static_cast<std::int32_t>(rows), static_cast<std::int32_t>(cols),
                         std::move(t));
  }

  static SparseIntMatrix from_triplet_text(const std::string& text) {
    std::istringstream is(text);
    return read_triplets(is);
  }

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  static bool column_major_less(const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  }

  std::int32_t rows_ = 0;
  std::int32_t cols_ = 0;
  std::vector<Triplet> entries_;
};

}  // namespace tropdelta
