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

// Homology of the theta complexes and the checks built on it.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tropdelta/chain_complex.hpp"
#include "tropdelta/enumeration.hpp"
#include "tropdelta/errors.hpp"
#include "tropdelta/modular_rank.hpp"
#include "tropdelta/parallel.hpp"
#include "tropdelta/partitions.hpp"
#include "tropdelta/smith.hpp"

namespace tropdelta {

// Largest n at which each check runs by default.
inline constexpr int kVanishingMaxN = 5;
inline constexpr int kSigmaSnfMaxN = 7;
inline constexpr int kCountsMaxN = 8;
inline constexpr int kDdZeroMaxN = 6;
inline constexpr int kEulerHomologyMaxN = 6;
// Table rows above this need an explicit long-running opt-in.
inline constexpr int kTableDefaultMaxN = 6;

struct DegreeHomology {
  int degree = 0;
  std::int64_t betti = 0;
  // Invariant factors > 1 of the torsion subgroup; empty over Q.
  std::vector<BigInt> torsion;

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologyResult {
  int n = 0;
  ComplexVariant variant = ComplexVariant::kFullDelta;
  bool integral = false;
  std::vector<DegreeHomology> degrees;  // ascending

  const DegreeHomology& at(int degree) const {
    for (const auto& d : degrees) {
      if (d.degree == degree) return d;
    }
    static const DegreeHomology kZero;
    return kZero;
  }
  std::int64_t reduced_euler() const {
    std::int64_t chi = 0;
    for (const auto& d : degrees) chi += (d.degree % 2 == 0 ? 1 : -1) * d.betti;
    return chi;
  }
};

struct HomologyOptions {
  // Smith normal forms (torsion included) instead of rational ranks.
  bool integral = false;
  RationalRankOptions rank;
  SnfOptions snf;
};

// Reduced homology from a complex with every boundary built.
inline HomologyResult compute_homology(const ChainComplex& cx, const HomologyOptions& opt = {}) {
  HomologyResult res;
  res.n = cx.n();
  res.variant = cx.variant();
  res.integral = opt.integral;
  const int lo = cx.min_degree();
  const int hi = cx.max_degree();
  std::map<int, std::int64_t> rank;
  std::map<int, std::vector<BigInt>> torsion;
  for (int d = lo; d <= hi; ++d) {
    if (opt.integral) {
      const SnfResult s = smith_normal_form(cx.d(d), opt.snf);
      rank[d] = s.rank;
      torsion[d - 1] = s.torsion();
    } else {
      rank[d] = rank_rational(cx.d(d), opt.rank);
    }
  }
  rank[hi + 1] = 0;
  for (int d = lo; d <= hi; ++d) {
    DegreeHomology h;
    h.degree = d;
    h.betti = cx.cell_count(d) - rank[d] - rank[d + 1];
    if (auto it = torsion.find(d); it != torsion.end()) h.torsion = it->second;
    res.degrees.push_back(std::move(h));
  }
  return res;
}

inline nlohmann::json to_json(const DegreeHomology& h) {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& f : h.torsion) t.push_back(f.str());
  return {{"degree", h.degree}, {"betti", h.betti}, {"torsion", t}};
}

inline nlohmann::json to_json(const HomologyResult& r) {
  nlohmann::json deg = nlohmann::json::array();
  for (const auto& h : r.degrees) deg.push_back(to_json(h));
  return {{"n", r.n},
          {"variant", to_string(r.variant)},
          {"integral", r.integral},
          {"degrees", deg},
          {"reduced_euler", r.reduced_euler()}};
}

// ---------------------------------------------------------------------------
// Top two rational Betti numbers.

enum class TableMode { kShortcut, kDirect };

struct TableRow {
  int n = 0;
  std::int64_t betti_top = 0;   // degree n+2
  std::int64_t betti_next = 0;  // degree n+1
  std::int64_t rank_top = 0;    // rank of the top boundary of the relative complex
  std::int64_t c_top = 0;
  std::int64_t c_next = 0;
  std::int64_t c_low = 0;
  // Direct mode: rank of the next boundary, which must equal c_low.
  std::optional<std::int64_t> rank_next;
};

// The full cells modulo the cyclic ones carry the reduced rational homology
// and have no homology below degree n+1, so the next boundary has rank c_n
// and two ranks determine the top two Betti numbers. Direct mode computes
// that second rank instead of assuming it.
inline TableRow table_row(int n, TableMode mode = TableMode::kShortcut,
                          const RationalRankOptions& opt = {}) {
  require_supported_n(n, "table_row");
  std::set<int> degrees{n + 2};
  if (mode == TableMode::kDirect) degrees.insert(n + 1);
  const ChainComplex cx =
      build_complex(n, ComplexVariant::kFullRelCyclic, std::nullopt, {}, degrees);
  TableRow row;
  row.n = n;
  row.c_top = cx.cell_count(n + 2);
  row.c_next = cx.cell_count(n + 1);
  row.c_low = cx.cell_count(n);
  row.rank_top = rank_rational(cx.d(n + 2), opt);
  row.betti_top = row.c_top - row.rank_top;
  row.betti_next = row.c_next - row.c_low - row.rank_top;
  if (mode == TableMode::kDirect) {
    row.rank_next = rank_rational(cx.d(n + 1), opt);
    if (*row.rank_next != row.c_low) {
      throw ContractViolation("table_row: rank of d" + std::to_string(n + 1) + " is " +
                              std::to_string(*row.rank_next) + ", expected c" +
                              std::to_string(n) + " = " + std::to_string(row.c_low));
    }
  }
  return row;
}

// ---------------------------------------------------------------------------
// Euler characteristic.

enum class EulerMode { kCensus, kHomology };

inline Rational expected_reduced_euler(int n) {
  return Rational(n % 2 == 0 ? factorial(n) : -factorial(n), 12);
}

// Census mode: alternating count of cells from the closed-form counts; the
// cyclic cells of each ordering contribute zero in total. Homology mode:
// alternating sum of the rational Betti numbers of the whole complex.
inline Rational euler_reduced(int n, EulerMode mode, const RationalRankOptions& opt = {}) {
  require_supported_n(n, "euler_reduced");
  if (mode == EulerMode::kCensus) {
    Rational chi(0);
    for (int d = n - 1; d <= n + 2; ++d) {
      const std::int64_t cells = full_cell_count(n, n + 2 - d) +
                                 cyclic_ordering_count(n) * cyclic_cell_count(n, d);
      chi += Rational(d % 2 == 0 ? cells : -cells);
    }
    return chi;
  }
  if (n > kEulerHomologyMaxN + 1) {
    throw UnsupportedRange("euler_reduced: homology mode is limited to n <= " +
                           std::to_string(kEulerHomologyMaxN + 1));
  }
  HomologyOptions hopt;
  hopt.rank = opt;
  return Rational(compute_homology(build_complex(n, ComplexVariant::kFullDelta), hopt)
                      .reduced_euler());
}

// ---------------------------------------------------------------------------
// Check reports.

struct CheckReport {
  int n = 0;
  std::string check;
  bool pass = false;
  nlohmann::json expected;
  nlohmann::json actual;
  std::int64_t runtime_ms = 0;
};

inline nlohmann::json to_json(const CheckReport& r) {
  return {{"n", r.n},
          {"check", r.check},
          {"status", r.pass ? "pass" : "fail"},
          {"expected", r.expected},
          {"actual", r.actual},
          {"runtime_ms", r.runtime_ms}};
}

namespace detail {

template <typename Fn>
CheckReport timed_check(int n, std::string name, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  r.n = n;
  r.check = std::move(name);
  body(r);
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

inline nlohmann::json exact(const Rational& q) {
  if (q.denominator() == 1) return q.numerator();
  return to_string(q);
}

inline void require_cap(int n, int cap, const char* what) {
  require_supported_n(n, what);
  if (n > cap) {
    throw UnsupportedRange(std::string(what) + ": n = " + std::to_string(n) +
                           " is above the cap of " + std::to_string(cap));
  }
}

inline std::string factor_pattern(std::int64_t ones, std::vector<int> tail = {}) {
  SnfResult s;
  s.factors.assign(static_cast<std::size_t>(ones), BigInt(1));
  for (int t : tail) s.factors.push_back(t);
  s.rank = static_cast<std::int64_t>(s.factors.size());
  return to_string(s);
}

inline CyclicOrdering identity_ordering(int n) {
  std::vector<Label> seq(n);
  std::iota(seq.begin(), seq.end(), Label{1});
  return CyclicOrdering::from_sequence(seq);
}

}  // namespace detail

inline CheckReport verify_euler(int n, const RationalRankOptions& opt = {}) {
  return detail::timed_check(n, "euler", [&](CheckReport& r) {
    const Rational expected = expected_reduced_euler(n);
    const Rational census = euler_reduced(n, EulerMode::kCensus);
    r.expected = {{"reduced_euler", detail::exact(expected)}};
    r.actual = {{"census", detail::exact(census)}};
    r.pass = census == expected;
    if (n <= kEulerHomologyMaxN) {
      const Rational hom = euler_reduced(n, EulerMode::kHomology, opt);
      r.actual["homology"] = detail::exact(hom);
      r.pass = r.pass && hom == expected;
    }
  });
}

// Integral homology of one ordering's cyclic complex: a single Z/2 in
// degree n+1 and nothing else.
inline bool cyclic_homology_as_claimed(const HomologyResult& h) {
  for (const auto& d : h.degrees) {
    if (d.degree == h.n + 1) {
      if (d.betti != 0 || d.torsion != std::vector<BigInt>{BigInt(2)}) return false;
    } else if (!d.is_zero()) {
      return false;
    }
  }
  return true;
}

inline CheckReport verify_cyclic_theorem(int n) {
  detail::require_cap(n, kSigmaSnfMaxN, "verify_cyclic_theorem");
  return detail::timed_check(n, "cyclic", [&](CheckReport& r) {
    const auto orderings = CyclicOrdering::all(n);
    std::vector<HomologyResult> per(orderings.size());
    HomologyOptions opt;
    opt.integral = true;
    parallel_for(orderings.size(), [&](std::size_t i) {
      per[i] = compute_homology(build_complex(n, ComplexVariant::kCyclicSigma, orderings[i]),
                                opt);
    });
    std::int64_t summands = 0;
    nlohmann::json failures = nlohmann::json::array();
    for (std::size_t i = 0; i < per.size(); ++i) {
      if (cyclic_homology_as_claimed(per[i])) {
        ++summands;
      } else if (failures.size() < 5) {
        nlohmann::json f = to_json(per[i]);
        f["sigma"] = orderings[i].to_string();
        failures.push_back(f);
      }
    }
    const std::int64_t expected = cyclic_ordering_count(n);
    r.expected = {{"orderings", expected},
                  {"per_sigma", "Z/2 in degree " + std::to_string(n + 1) + ", zero elsewhere"},
                  {"torsion_rank", expected}};
    r.actual = {{"orderings", static_cast<std::int64_t>(orderings.size())},
                {"torsion_rank", summands},
                {"failures", failures}};
    r.pass = summands == expected && static_cast<std::int64_t>(orderings.size()) == expected;
  });
}

inline CheckReport verify_snf_claims(int n) {
  detail::require_cap(n, kSigmaSnfMaxN, "verify_snf_claims");
  return detail::timed_check(n, "snf", [&](CheckReport& r) {
    const ChainComplex cx =
        build_complex(n, ComplexVariant::kCyclicSigma, detail::identity_ordering(n));
    const std::int64_t tri = std::int64_t{n} * (n + 1) / 2;
    const std::vector<std::pair<int, std::string>> claims{
        {n + 2, detail::factor_pattern(tri - 1, {2})},
        {n + 1, detail::factor_pattern(tri)},
        {n, detail::factor_pattern(n)},
    };
    r.pass = true;
    r.expected = nlohmann::json::object();
    r.actual = nlohmann::json::object();
    for (const auto& [deg, want] : claims) {
      const std::string got = to_string(smith_normal_form(cx.d(deg)));
      const std::string key = "d" + std::to_string(deg);
      r.expected[key] = want;
      r.actual[key] = got;
      r.pass = r.pass && got == want;
    }
  });
}

struct TorsionWitness {
  // Sum of the top boundary columns other than those of cells with every
  // mark on one arc and a LessEq decoration.
  std::vector<std::int64_t> v;
  bool all_even = false;
  SnfResult base;
  SnfResult augmented;  // with v/2 appended as a column
  // v/2 lies outside the integer column span of the top boundary.
  bool outside_span() const { return all_even && !(augmented == base); }
};

inline TorsionWitness torsion_witness(int n, const CyclicOrdering& sigma) {
  detail::require_cap(n, kSigmaSnfMaxN, "torsion_witness");
  const ChainComplex cx = build_complex(n, ComplexVariant::kCyclicSigma, sigma, {},
                                        std::set<int>{n + 2});
  const SparseIntMatrix& top = cx.d(n + 2);
  const auto& cols = cx.cells(n + 2);
  std::vector<char> excluded(cols.size(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto& t = cols[j].type;
    excluded[j] = cols[j].decoration == Decoration::kLessEq && t.marked_vertex_count() == 0 &&
                  t.arc_length(0) == n;
  }
  TorsionWitness w;
  w.v.assign(top.rows(), 0);
  for (const auto& e : top.entries()) {
    if (!excluded[e.col]) w.v[e.row] += e.value;
  }
  w.all_even = std::all_of(w.v.begin(), w.v.end(), [](std::int64_t x) { return x % 2 == 0; });
  w.base = smith_normal_form(top);
  if (w.all_even) {
    std::vector<Triplet> half;
    for (std::int32_t i = 0; i < top.rows(); ++i) {
      if (w.v[i] != 0) half.push_back({i, 0, w.v[i] / 2});
    }
    w.augmented = smith_normal_form(
        top.append_columns(SparseIntMatrix::from_triplets(top.rows(), 1, std::move(half))));
  }
  return w;
}

inline CheckReport verify_torsion_witness(int n) {
  return detail::timed_check(n, "witness", [&](CheckReport& r) {
    const TorsionWitness w = torsion_witness(n, detail::identity_ordering(n));
    r.expected = {{"v_even", true}, {"half_v_in_span", false}};
    r.actual = {{"v_even", w.all_even},
                {"half_v_in_span", !w.outside_span()},
                {"snf", to_string(w.base)},
                {"snf_augmented", w.all_even ? to_string(w.augmented) : "n/a"}};
    r.pass = w.all_even && w.outside_span();
  });
}

inline CheckReport verify_vanishing(int n) {
  detail::require_cap(n, kVanishingMaxN, "verify_vanishing");
  return detail::timed_check(n, "vanishing", [&](CheckReport& r) {
    HomologyOptions opt;
    opt.integral = true;
    const HomologyResult h = compute_homology(build_complex(n, ComplexVariant::kFullDelta), opt);
    bool zero_low = true;
    for (const auto& d : h.degrees) {
      if (d.degree >= 1 && d.degree <= n && !d.is_zero()) zero_low = false;
    }
    r.expected = {{"zero_in_degrees", {1, n}}};
    r.actual = to_json(h);
    r.pass = zero_low;
  });
}

inline CheckReport verify_counts(int n) {
  detail::require_cap(n, kCountsMaxN, "verify_counts");
  return detail::timed_check(n, "counts", [&](CheckReport& r) {
    const CellCensus c = census(n);
    CellCensus want;
    want.n = n;
    want.sigma_count = cyclic_ordering_count(n);
    for (int d = n - 1; d <= n + 2; ++d) want.cyclic_per_sigma[d] = cyclic_cell_count(n, d);
    for (int codim = 0; codim <= 2; ++codim) {
      const std::int64_t k = full_cell_count(n, codim);
      if (k > 0) want.full[n + 2 - codim] = k;
    }
    // Every cyclic cell belongs to exactly one ordering's complex.
    std::map<int, std::int64_t> cyclic_all;
    for (const auto& cell : enumerate_cells(n, CellClass::kCyclicAll)) {
      ++cyclic_all[cell.dimension()];
    }
    std::map<int, std::int64_t> cyclic_want;
    for (auto [d, k] : want.cyclic_per_sigma) cyclic_want[d] = k * want.sigma_count;
    r.expected = to_json(want);
    r.actual = to_json(c);
    nlohmann::json all_want = nlohmann::json::object();
    nlohmann::json all_got = nlohmann::json::object();
    for (auto [d, k] : cyclic_want) all_want[std::to_string(d)] = k;
    for (auto [d, k] : cyclic_all) all_got[std::to_string(d)] = k;
    r.expected["cyclic_all"] = all_want;
    r.actual["cyclic_all"] = all_got;
    r.pass = c.cyclic_per_sigma == want.cyclic_per_sigma && c.full == want.full &&
             c.sigma_count == want.sigma_count && cyclic_all == cyclic_want;
  });
}

inline CheckReport verify_ddzero(int n) {
  detail::require_cap(n, kDdZeroMaxN, "verify_ddzero");
  return detail::timed_check(n, "ddzero", [&](CheckReport& r) {
    r.pass = true;
    r.expected = nlohmann::json::object();
    r.actual = nlohmann::json::object();
    for (auto v : {ComplexVariant::kFullDelta, ComplexVariant::kCyclicSigma,
                   ComplexVariant::kCyclicAll, ComplexVariant::kFullRelCyclic}) {
      std::optional<CyclicOrdering> sigma;
      if (v == ComplexVariant::kCyclicSigma) sigma = detail::identity_ordering(n);
      const ChainComplex cx = build_complex(n, v, sigma);
      const auto bad = failing_dd_degrees(cx);
      r.expected[to_string(v)] = nlohmann::json::array();
      r.actual[to_string(v)] = bad;
      r.pass = r.pass && bad.empty();
    }
  });
}

// Rational Betti numbers of `variant` under the default orientation and
// under a seeded shuffle of every full cell's vertex order.
inline std::pair<HomologyResult, HomologyResult> orientation_pair(int n, ComplexVariant variant,
                                                                  std::uint64_t seed) {
  OrientationConvention shuffled;
  shuffled.shuffle_seed = seed;
  return {compute_homology(build_complex(n, variant)),
          compute_homology(build_complex(n, variant, std::nullopt, shuffled))};
}

}  // namespace tropdelta
