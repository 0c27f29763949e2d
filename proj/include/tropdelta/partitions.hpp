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

// Partitions into three parts and the counting functions for full theta
// cells.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "tropdelta/errors.hpp"

namespace tropdelta {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// Largest multiplicity among the part sizes of a 3-part partition.
inline int alpha(const std::array<int, 3>& parts) {
  std::array<int, 3> p = parts;
  std::sort(p.begin(), p.end());
  if (p[0] == p[2]) return 3;
  if (p[0] == p[1] || p[1] == p[2]) return 2;
  return 1;
}

inline std::int64_t factorial(int n) {
  if (n < 0 || n > 20) {
    throw InputError("factorial: argument " + std::to_string(n) +
                     " outside 0..20");
  }
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Sum over partitions (k1 >= k2 >= k3 >= 1) of n of 1/alpha!, by direct
// enumeration of the partitions.
inline Rational partition_weight_sum(int n) {
  Rational total(0);
  for (int k1 = 1; k1 <= n; ++k1) {
    for (int k2 = 1; k2 <= k1; ++k2) {
      const int k3 = n - k1 - k2;
      if (k3 < 1 || k3 > k2) continue;
      total += Rational(1, factorial(alpha({k1, k2, k3})));
    }
  }
  return total;
}

// Quadratic closed form of the same sum, valid for n >= 3.
inline Rational partition_weight_closed_form(int n) {
  return Rational(n * n, 12) - Rational(n, 4) + Rational(1, 6);
}

// Number of full theta cells of dimension n + 2 - codim (codim 0, 1, 2):
// n! f(n)/2, n! f(n-1), n! f(n-2)/2.
inline std::int64_t full_cell_count(int n, int codim) {
  if (codim < 0 || codim > 2) return 0;
  Rational c = Rational(factorial(n)) * partition_weight_sum(n - codim);
  if (codim != 1) c /= 2;
  if (c.denominator() != 1) {
    throw ContractViolation("full_cell_count: non-integral count " +
                            to_string(c));
  }
  return c.numerator();
}

// Per-ordering cyclic cell counts in dimension n+2, n+1, n, n-1.
inline std::int64_t cyclic_cell_count(int n, int degree) {
  const std::int64_t tri = std::int64_t{n} * (n + 1) / 2;
  if (degree == n + 2) return tri;
  if (degree == n + 1) return 2 * tri;
  if (degree == n) return tri + n;
  if (degree == n - 1) return n;
  return 0;
}

inline std::int64_t cyclic_ordering_count(int n) {
  return n < 3 ? 1 : factorial(n - 1) / 2;
}

}  // namespace tropdelta
