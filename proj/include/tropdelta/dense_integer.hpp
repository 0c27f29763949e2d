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

// Dense arbitrary-precision integer matrices and fraction-free elimination.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropdelta/sparse_matrix.hpp"

namespace tropdelta {

using BigInt = boost::multiprecision::cpp_int;
using DenseBigMatrix = std::vector<std::vector<BigInt>>;

inline DenseBigMatrix to_dense_big(const SparseIntMatrix& m) {
  DenseBigMatrix a(m.rows(), std::vector<BigInt>(m.cols()));
  for (const auto& t : m.entries()) a[t.row][t.col] = t.value;
  return a;
}

// Bareiss fraction-free elimination. Returns the rank; every intermediate
// value is an exact minor of the input.
inline std::int64_t bareiss_rank(DenseBigMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

inline std::int64_t bareiss_rank(const SparseIntMatrix& m) {
  return bareiss_rank(to_dense_big(m));
}

// Determinant of a square matrix by Bareiss elimination.
inline BigInt bareiss_determinant(DenseBigMatrix a) {
  const std::size_t k = a.size();
  if (k == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < k && a[pivot][c] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < k; ++j) {
        a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * a[k - 1][k - 1];
}

}  // namespace tropdelta
