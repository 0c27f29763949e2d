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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "tropdelta/chain_complex.hpp"
#include "tropdelta/dense_integer.hpp"
#include "tropdelta/modular_rank.hpp"
#include "tropdelta/smith.hpp"

namespace tropdelta {
namespace {

using Dense = std::vector<std::vector<std::int64_t>>;

SparseIntMatrix RandomMatrix(std::mt19937_64& rng, int rows, int cols, int bound,
                             double density = 1.0) {
  std::uniform_int_distribution<int> value(-bound, bound);
  std::bernoulli_distribution keep(density);
  Dense a(rows, std::vector<std::int64_t>(cols, 0));
  for (auto& row : a) {
    for (auto& x : row) x = keep(rng) ? value(rng) : 0;
  }
  return SparseIntMatrix::from_dense(a);
}

std::vector<BigInt> Factors(std::initializer_list<int> xs) {
  return {xs.begin(), xs.end()};
}

TEST(IsPrime, MatchesTrialDivision) {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), trial(n)) << n;
  EXPECT_TRUE(is_prime(4294967291ull));
  EXPECT_FALSE(is_prime(4294967297ull));  // 641 * 6700417
  EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to 2, 3, 5, 7
}

TEST(RankModP, SmallExamples) {
  EXPECT_EQ(rank_mod_p(SparseIntMatrix(3, 4), 7), 0);
  EXPECT_EQ(rank_mod_p(SparseIntMatrix::identity(5), 2), 5);
  const auto d = SparseIntMatrix::from_dense({{2, 0}, {0, 3}});
  EXPECT_EQ(rank_mod_p(d, 2), 1);
  EXPECT_EQ(rank_mod_p(d, 3), 1);
  EXPECT_EQ(rank_mod_p(d, 5), 2);
  const auto singular = SparseIntMatrix::from_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  EXPECT_EQ(rank_mod_p(singular, 1000003), 2);
}

TEST(RankModP, RejectsBadModulus) {
  const auto m = SparseIntMatrix::identity(2);
  EXPECT_THROW(rank_mod_p(m, 15), InputError);
  EXPECT_THROW(rank_mod_p(m, 1), InputError);
  EXPECT_THROW(rank_mod_p(m, 4294967311ull), InputError);  // prime, but above 2^32
}

TEST(RankModP, NeverExceedsRationalRank) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = RandomMatrix(rng, 6, 7, 4, 0.6);
    const auto r = bareiss_rank(m);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 1000003ull}) EXPECT_LE(rank_mod_p(m, p), r);
  }
}

TEST(RankRational, AgreesWithBareissOnRandomMatrices) {
  std::mt19937_64 rng(12);
  RationalRankOptions no_certify;
  no_certify.certify_limit = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> dim(1, 12);
    const auto m = RandomMatrix(rng, dim(rng), dim(rng), 3, 0.4);
    EXPECT_EQ(rank_rational(m, no_certify), bareiss_rank(m));
    const auto report = rank_rational_report(m);
    EXPECT_TRUE(report.certified);
    EXPECT_EQ(report.rank, bareiss_rank(m));
  }
}

TEST(RankRational, LowRankProducts) {
  std::mt19937_64 rng(13);
  for (int k = 0; k <= 6; ++k) {
    const auto a = RandomMatrix(rng, 40, k, 5);
    const auto b = RandomMatrix(rng, k, 50, 5);
    const auto m = a.multiply(b);
    RationalRankOptions opt;
    opt.certify_limit = 0;
    EXPECT_EQ(rank_rational(m, opt), bareiss_rank(m)) << k;
    EXPECT_LE(rank_rational(m, opt), k);
  }
}

TEST(RankRational, PrimesAreSeededAndInRange) {
  const auto a = draw_primes(7, 5);
  EXPECT_EQ(a, draw_primes(7, 5));
  EXPECT_NE(a, draw_primes(8, 5));
  for (auto p : a) {
    EXPECT_TRUE(is_prime(p));
    EXPECT_GE(p, 1ull << 30);
    EXPECT_LT(p, 1ull << 31);
  }
}

TEST(RankRational, EmptyAndZeroMatrices) {
  EXPECT_EQ(rank_rational(SparseIntMatrix(0, 5)), 0);
  EXPECT_EQ(rank_rational(SparseIntMatrix(4, 4)), 0);
}

TEST(Bareiss, Determinant) {
  DenseBigMatrix a = {{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
  EXPECT_EQ(bareiss_determinant(a), BigInt(2 * (3 - 2) - 0 + 1 * (1 - 3)));
  DenseBigMatrix s = {{1, 2}, {2, 4}};
  EXPECT_EQ(bareiss_determinant(s), 0);
}

TEST(Smith, HandExamples) {
  const auto a = smith_normal_form(SparseIntMatrix::from_dense({{2, 0}, {0, 3}}));
  EXPECT_EQ(a.factors, Factors({1, 6}));
  const auto b = smith_normal_form(SparseIntMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  EXPECT_EQ(b.factors, Factors({2, 6, 12}));
  const auto c = smith_normal_form(SparseIntMatrix::from_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  EXPECT_EQ(c.factors, Factors({1, 3}));
  EXPECT_EQ(c.rank, 2);
  EXPECT_EQ(to_string(c), "(1, 3)");
  const auto z = smith_normal_form(SparseIntMatrix(3, 2));
  EXPECT_TRUE(z.factors.empty());
  EXPECT_EQ(to_string(z), "()");
}

TEST(Smith, PrintsRunsWithExponents) {
  SnfResult s;
  for (int i = 0; i < 9; ++i) s.factors.push_back(1);
  s.factors.push_back(2);
  s.rank = 10;
  EXPECT_EQ(to_string(s), "(1^9, 2)");
  EXPECT_EQ(s.count_equal(1), 9);
  EXPECT_EQ(s.torsion(), Factors({2}));
}

TEST(Smith, MatchesMinorOracleOnRandomSmallMatrices) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = RandomMatrix(rng, 4, 5, 3);
    EXPECT_EQ(smith_normal_form(m), snf_oracle_minors(m)) << m.to_triplet_text();
  }
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> dim(1, 6);
    const auto m = RandomMatrix(rng, dim(rng), dim(rng), 6, 0.5);
    EXPECT_EQ(smith_normal_form(m), snf_oracle_minors(m)) << m.to_triplet_text();
  }
}

TEST(Smith, InvariantUnderSignedPermutationsAndTranspose) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = RandomMatrix(rng, 7, 9, 4, 0.5);
    std::vector<std::int32_t> rp(7), cp(9);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> rs(7), cs(9);
    for (auto& x : rs) x = coin(rng) ? 1 : -1;
    for (auto& x : cs) x = coin(rng) ? 1 : -1;
    const auto s = smith_normal_form(m);
    EXPECT_EQ(smith_normal_form(m.permuted(rp, cp, rs, cs)), s);
    EXPECT_EQ(smith_normal_form(m.transpose()), s);
    EXPECT_EQ(s.rank, bareiss_rank(m));
  }
}

TEST(Smith, ProductOfFactorsIsDeterminant) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = RandomMatrix(rng, 6, 6, 5);
    BigInt det = bareiss_determinant(to_dense_big(m));
    if (det < 0) det = -det;
    const auto s = smith_normal_form(m);
    if (det == 0) {
      EXPECT_LT(s.rank, 6);
      continue;
    }
    BigInt prod = 1;
    for (const auto& f : s.factors) prod *= f;
    EXPECT_EQ(prod, det);
  }
}

TEST(Smith, RespectsCaps) {
  SnfOptions opt;
  opt.cap = 3;
  EXPECT_THROW(smith_normal_form(SparseIntMatrix::identity(4), opt), ResourceError);
  EXPECT_NO_THROW(smith_normal_form(SparseIntMatrix(4, 3), opt));
  EXPECT_THROW(snf_oracle_minors(SparseIntMatrix(9, 9)), ResourceError);
  EXPECT_THROW(snf_oracle_minors(SparseIntMatrix(2, 17)), ResourceError);
}

TEST(Triplets, RoundTrip) {
  std::mt19937_64 rng(17);
  const auto m = RandomMatrix(rng, 5, 8, 9, 0.3);
  const std::string text = m.to_triplet_text();
  EXPECT_EQ(SparseIntMatrix::from_triplet_text(text), m);
  EXPECT_EQ(text.substr(text.size() - 6), "0 0 0\n");
}

TEST(Triplets, ReadErrors) {
  EXPECT_THROW(SparseIntMatrix::from_triplet_text(""), InputError);
  EXPECT_THROW(SparseIntMatrix::from_triplet_text("2 2 1\n1 1 5\n"), InputError);
  EXPECT_THROW(SparseIntMatrix::from_triplet_text("2 2 2\n1 1 5\n0 0 0\n"), InputError);
  EXPECT_THROW(SparseIntMatrix::from_triplet_text("2 2 1\n3 1 5\n0 0 0\n"), InputError);
  EXPECT_THROW(SparseIntMatrix::from_triplet_text("2 2 1\n1 1 0\n0 0 0\n"), InputError);
}

TEST(SparseMatrix, DuplicatesSumAndZerosDrop) {
  const auto m = SparseIntMatrix::from_triplets(2, 2, {{0, 0, 1}, {0, 0, -1}, {1, 1, 2}, {1, 1, 3}});
  EXPECT_EQ(m.nnz(), 1u);
  EXPECT_EQ(m.entries()[0].value, 5);
  EXPECT_THROW(SparseIntMatrix::from_triplets(2, 2, {{2, 0, 1}}), InputError);
}

TEST(ComplexRanks, KnownSmallValues) {
  const auto sigma5 = CyclicOrdering::from_labels({1, 2, 3, 4, 5});
  EXPECT_EQ(rank_rational(build_complex(5, ComplexVariant::kCyclicSigma, sigma5).d(7)), 15);
  EXPECT_EQ(rank_rational(build_complex(5, ComplexVariant::kFullRelCyclic).d(7)), 45);
  EXPECT_EQ(rank_rational(build_complex(4, ComplexVariant::kFullRelCyclic).d(6)), 3);
}

}  // namespace
}  // namespace tropdelta
