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

#include <map>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "tropdelta/enumeration.hpp"
#include "tropdelta/partitions.hpp"

namespace tropdelta {
namespace {

std::map<int, std::int64_t> CountByDegree(const std::vector<DecoratedCell>& cells) {
  std::map<int, std::int64_t> out;
  for (const auto& c : cells) ++out[c.dimension()];
  return out;
}

TEST(EnumerateCells, CyclicPerOrderingAtFive) {
  const auto cells = enumerate_cells(5, CellClass::kCyclicSigma,
                                     CyclicOrdering::from_labels({1, 2, 3, 4, 5}));
  EXPECT_EQ(CountByDegree(cells), (std::map<int, std::int64_t>{{4, 5}, {5, 20}, {6, 30}, {7, 15}}));
}

TEST(EnumerateCells, FullTopCellsAtFour) {
  const auto counts = CountByDegree(enumerate_cells(4, CellClass::kFull));
  EXPECT_EQ(counts.at(6), 6);
  EXPECT_EQ(counts.count(4), 0u);
}

TEST(EnumerateCells, CyclicCellsSplitIntoThreeOrderingsAtFour) {
  std::map<CyclicOrdering, int> by_sigma;
  for (const auto& c : enumerate_cells(4, CellClass::kCyclicAll)) {
    ++by_sigma[*classify(c.type).sigma];
  }
  std::vector<std::string> names;
  for (const auto& [s, k] : by_sigma) {
    names.push_back(s.to_string());
    EXPECT_EQ(k, 48);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"(1 2 3 4)", "(1 2 4 3)", "(1 3 2 4)"}));
}

TEST(EnumerateCells, RejectsSmallN) {
  EXPECT_THROW(enumerate_cells(3, CellClass::kAll), UnsupportedRange);
  EXPECT_THROW(enumerate_types(2), UnsupportedRange);
}

TEST(EnumerateCells, DuplicateFreeAndCanonical) {
  for (int n = 4; n <= 6; ++n) {
    const auto cells = enumerate_cells(n, CellClass::kAll);
    std::set<DecoratedCell> seen(cells.begin(), cells.end());
    EXPECT_EQ(seen.size(), cells.size());
    for (const auto& c : cells) {
      EXPECT_TRUE(is_canonical(c.type));
      EXPECT_EQ(c.type.has_parallel_pair(), c.decoration != Decoration::kTrivial);
    }
  }
}

TEST(EnumerateCells, CountsMatchClosedFormsUpToSeven) {
  for (int n = 4; n <= 7; ++n) {
    const CellCensus c = census(n);
    for (int d = n - 1; d <= n + 2; ++d) {
      EXPECT_EQ(c.cyclic_per_sigma.at(d), cyclic_cell_count(n, d)) << n << " " << d;
    }
    for (int codim = 0; codim <= 2; ++codim) {
      const int d = n + 2 - codim;
      const std::int64_t got = c.full.count(d) ? c.full.at(d) : 0;
      EXPECT_EQ(got, full_cell_count(n, codim)) << n << " " << d;
    }
    EXPECT_EQ(c.sigma_count, cyclic_ordering_count(n));
  }
}

TEST(EnumerateCells, CyclicOrderingsShareCellCounts) {
  for (int n = 4; n <= 6; ++n) {
    std::map<CyclicOrdering, std::map<int, std::int64_t>> by_sigma;
    for (const auto& c : enumerate_cells(n, CellClass::kCyclicAll)) {
      ++by_sigma[*classify(c.type).sigma][c.dimension()];
    }
    EXPECT_EQ(static_cast<std::int64_t>(by_sigma.size()), cyclic_ordering_count(n));
    for (const auto& [sigma, counts] : by_sigma) {
      EXPECT_EQ(counts, by_sigma.begin()->second) << sigma.to_string();
    }
  }
}

TEST(EnumerateCells, DirectCyclicGenerationMatchesFilter) {
  for (int n = 4; n <= 6; ++n) {
    std::map<CyclicOrdering, std::vector<MarkedThetaType>> filtered;
    for (const auto& t : enumerate_types(n)) {
      if (!t.is_full()) filtered[*classify(t).sigma].push_back(t);
    }
    for (const auto& sigma : CyclicOrdering::all(n)) {
      EXPECT_EQ(enumerate_cyclic_types(n, sigma), filtered[sigma]) << sigma.to_string();
    }
  }
}

TEST(EnumerateCells, FullClosureAddsOnlyAllowedCyclicTypes) {
  for (const auto& c : enumerate_cells(5, CellClass::kFullClosure)) {
    EXPECT_LE(c.type.empty_arc_count(), c.type.marked_vertex_count());
  }
  const auto full = enumerate_cells(5, CellClass::kFull);
  const auto closure = enumerate_cells(5, CellClass::kFullClosure);
  const std::set<DecoratedCell> closure_set(closure.begin(), closure.end());
  for (const auto& c : full) EXPECT_TRUE(closure_set.count(c));
  EXPECT_GT(closure.size(), full.size());
}

TEST(Census, ValuesAtSix) {
  const CellCensus c = census(6);
  EXPECT_EQ(c.full.at(8), 600);
  EXPECT_EQ(c.full.at(7), 720);
  EXPECT_EQ(c.full.at(6), 180);
}

TEST(Census, JsonShape) {
  const auto j = to_json(census(4));
  EXPECT_EQ(j.at("n"), 4);
  EXPECT_EQ(j.at("sigma_count"), 3);
  EXPECT_EQ(j.at("cyclic_per_sigma").at("6"), 10);
  EXPECT_EQ(j.at("cyclic_per_sigma").at("5"), 20);
  EXPECT_EQ(j.at("cyclic_per_sigma").at("4"), 14);
  EXPECT_EQ(j.at("cyclic_per_sigma").at("3"), 4);
  EXPECT_EQ(j.at("full").at("6"), 6);
}

TEST(CellJson, ListsFormArcsAndMarks) {
  const DecoratedCell c{canonicalize(MarkedThetaType::make(4, 1, 0, {{{2, 3, 4}, {}, {}}})).type,
                        Decoration::kLessEq};
  const auto j = to_json(c);
  EXPECT_EQ(j.at("degree"), 5);
  EXPECT_EQ(j.at("decoration"), "le");
  EXPECT_EQ(j.at("form"), nlohmann::json({1, 0, 3, 0, 0}));
  EXPECT_EQ(j.at("vertex_marks")[1], nullptr);
}

}  // namespace
}  // namespace tropdelta
