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

#include <gtest/gtest.h>

#include "tropdelta/partitions.hpp"

namespace tropdelta {
namespace {

TEST(Alpha, LargestPartMultiplicity) {
  EXPECT_EQ(alpha({4, 3, 3}), 2);
  EXPECT_EQ(alpha({2, 2, 2}), 3);
  EXPECT_EQ(alpha({5, 3, 1}), 1);
}

TEST(PartitionWeight, SmallValues) {
  EXPECT_EQ(partition_weight_sum(2), Rational(0));
  EXPECT_EQ(partition_weight_sum(3), Rational(1, 6));
  EXPECT_EQ(partition_weight_sum(6), Rational(5, 3));
  EXPECT_EQ(partition_weight_sum(8), Rational(7, 2));
}

TEST(PartitionWeight, ClosedFormAgreesUpTo50) {
  for (int n = 3; n <= 50; ++n) {
    EXPECT_EQ(partition_weight_sum(n), partition_weight_closed_form(n)) << "n = " << n;
  }
}

TEST(PartitionWeight, AlternatingSumIsOneTwelfth) {
  for (int n = 4; n <= 50; ++n) {
    const Rational s = partition_weight_sum(n) / 2 - partition_weight_sum(n - 1) +
                       partition_weight_sum(n - 2) / 2;
    EXPECT_EQ(s, Rational(1, 12)) << "n = " << n;
  }
}

TEST(CellCounts, FullCells) {
  EXPECT_EQ(full_cell_count(4, 0), 6);
  EXPECT_EQ(full_cell_count(4, 1), 4);
  EXPECT_EQ(full_cell_count(4, 2), 0);
  EXPECT_EQ(full_cell_count(6, 0), 600);
  EXPECT_EQ(full_cell_count(6, 1), 720);
  EXPECT_EQ(full_cell_count(6, 2), 180);
  EXPECT_EQ(full_cell_count(8, 0), 70560);
  EXPECT_EQ(full_cell_count(8, 1), 100800);
  EXPECT_EQ(full_cell_count(8, 2), 33600);
}

TEST(CellCounts, CyclicCellsPerOrdering) {
  EXPECT_EQ(cyclic_cell_count(4, 6), 10);
  EXPECT_EQ(cyclic_cell_count(4, 5), 20);
  EXPECT_EQ(cyclic_cell_count(4, 4), 14);
  EXPECT_EQ(cyclic_cell_count(4, 3), 4);
  EXPECT_EQ(cyclic_cell_count(4, 2), 0);
  EXPECT_EQ(cyclic_ordering_count(4), 3);
  EXPECT_EQ(cyclic_ordering_count(7), 360);
}

TEST(Rational, PrintsExactly) {
  EXPECT_EQ(to_string(Rational(5, 3)), "5/3");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
}

}  // namespace
}  // namespace tropdelta
