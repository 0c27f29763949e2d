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
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "tropdelta/theta_type.hpp"

namespace tropdelta {
namespace {

MarkedThetaType Theta(int n, int u, int v, std::array<std::vector<int>, 3> arcs) {
  return MarkedThetaType::make(n, u, v, arcs);
}

// Random valid type with 4 <= n <= 10.
MarkedThetaType RandomType(std::mt19937& rng) {
  for (;;) {
    const int n = std::uniform_int_distribution<int>(4, 10)(rng);
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    std::size_t next = 0;
    const int u = std::bernoulli_distribution(0.4)(rng) ? labels[next++] : 0;
    const int v = std::bernoulli_distribution(0.4)(rng) ? labels[next++] : 0;
    std::array<std::vector<int>, 3> arcs;
    for (; next < labels.size(); ++next) {
      arcs[std::uniform_int_distribution<int>(0, 2)(rng)].push_back(labels[next]);
    }
    if (arcs[0].empty() && arcs[1].empty() && arcs[2].empty()) continue;
    return Theta(n, u, v, arcs);
  }
}

TEST(MarkedThetaType, EdgeCountFollowsVertexMarks) {
  EXPECT_EQ(Theta(4, 0, 0, {{{1, 2, 3}, {4}, {}}}).edge_count(), 7);
  EXPECT_EQ(Theta(4, 1, 0, {{{2, 3}, {4}, {}}}).edge_count(), 6);
  EXPECT_EQ(Theta(4, 1, 2, {{{3}, {4}, {}}}).edge_count(), 5);
}

TEST(MarkedThetaType, RejectsInvalidMarkings) {
  EXPECT_THROW(Theta(4, 0, 0, {{{1, 2, 3}, {3}, {}}}), InputError);
  EXPECT_THROW(Theta(4, 0, 0, {{{1, 2, 3}, {}, {}}}), InputError);
  EXPECT_THROW(Theta(4, 0, 0, {{{1, 2, 3}, {5}, {}}}), InputError);
  EXPECT_THROW(Theta(2, 1, 2, {{{}, {}, {}}}), InputError);
}

TEST(Classify, CyclicTypeReadsOrderingAlongTheCycle) {
  const auto c = classify(Theta(4, 0, 0, {{{1, 2, 3}, {4}, {}}}));
  EXPECT_FALSE(c.full);
  ASSERT_TRUE(c.sigma.has_value());
  EXPECT_EQ(c.sigma->to_string(), "(1 2 3 4)");
}

TEST(Classify, AllArcsMarkedIsFull) {
  const auto c = classify(Theta(4, 0, 0, {{{1, 2}, {3}, {4}}}));
  EXPECT_TRUE(c.full);
  EXPECT_FALSE(c.sigma.has_value());
}

TEST(Classify, ParallelPairTypeIsCyclic) {
  const auto t = Theta(4, 0, 0, {{{1, 2, 3, 4}, {}, {}}});
  EXPECT_TRUE(t.has_parallel_pair());
  const auto c = classify(t);
  ASSERT_TRUE(c.sigma.has_value());
  EXPECT_EQ(c.sigma->to_string(), "(1 2 3 4)");
}

TEST(Classify, VertexMarksJoinTheCycle) {
  // u=2, arc [3], v=4, second arc [1] read back from v: cycle 2 3 4 1.
  const auto c = classify(Theta(4, 2, 4, {{{3}, {1}, {}}}));
  ASSERT_TRUE(c.sigma.has_value());
  EXPECT_EQ(*c.sigma, CyclicOrdering::from_labels({1, 2, 3, 4}));
}

TEST(Contract, LastEdgeOfSingletonArcCreatesParallelPair) {
  const auto t = Theta(4, 0, 0, {{{1, 2, 3}, {4}, {}}});
  const auto out = contract(t, {1, 1});
  ASSERT_FALSE(out.is_bridge());
  EXPECT_TRUE(out.parallel_pair_created());
  EXPECT_EQ(out.result(), Theta(4, 0, 4, {{{1, 2, 3}, {}, {}}}));
  const ThetaForm f = form_of(out.result());
  EXPECT_EQ(f.eps1, 1);
  EXPECT_EQ(f.eps2, 0);
  EXPECT_EQ(f.k, (std::array<int, 3>{3, 0, 0}));
}

TEST(Contract, EdgeBetweenTwoMarksIsBridge) {
  const auto t = Theta(4, 0, 0, {{{1, 2, 3}, {4}, {}}});
  EXPECT_TRUE(contract(t, {0, 2}).is_bridge());
}

TEST(Contract, EmptyArcEdgeIsBridge) {
  const auto t = Theta(4, 0, 0, {{{1, 2, 3}, {4}, {}}});
  EXPECT_TRUE(contract(t, {2, 0}).is_bridge());
}

TEST(Contract, EdgeIntoMarkedVertexIsBridge) {
  const auto t = Theta(4, 1, 0, {{{2, 3}, {4}, {}}});
  EXPECT_TRUE(contract(t, {0, 0}).is_bridge());
  EXPECT_FALSE(contract(t, {0, 2}).is_bridge());
}

TEST(Contract, UnknownEdgeIsInputError) {
  const auto t = Theta(4, 0, 0, {{{1, 2, 3}, {4}, {}}});
  EXPECT_THROW(contract(t, {1, 2}), InputError);
  EXPECT_THROW(contract(t, {3, 0}), InputError);
}

TEST(Contract, FirstEdgeMovesMarkToU) {
  const auto t = Theta(5, 0, 0, {{{1, 2}, {3, 4}, {5}}});
  const auto out = contract(t, {1, 0});
  ASSERT_FALSE(out.is_bridge());
  EXPECT_FALSE(out.parallel_pair_created());
  EXPECT_EQ(out.result(), Theta(5, 3, 0, {{{1, 2}, {4}, {5}}}));
  EXPECT_EQ(out.map_edge({1, 1}), (EdgeId{1, 0}));
  EXPECT_EQ(out.map_edge({1, 2}), (EdgeId{1, 1}));
  EXPECT_EQ(out.map_edge({0, 1}), (EdgeId{0, 1}));
  EXPECT_FALSE(out.map_edge({1, 0}).has_value());
}

TEST(Canonicalize, SortsArcsByLength) {
  const auto c = canonicalize(Theta(4, 0, 0, {{{}, {4}, {1, 2, 3}}}));
  EXPECT_EQ(c.type, Theta(4, 0, 0, {{{1, 2, 3}, {4}, {}}}));
  EXPECT_EQ(c.relabel.apply(Theta(4, 0, 0, {{{}, {4}, {1, 2, 3}}})), c.type);
}

TEST(Canonicalize, VertexSwapReversesArcs) {
  const auto a = canonicalize(Theta(4, 0, 0, {{{}, {4}, {1, 2, 3}}})).type;
  const auto b = canonicalize(Theta(4, 0, 0, {{{3, 2, 1}, {}, {4}}})).type;
  EXPECT_EQ(a, b);
}

TEST(Canonicalize, GenericFullTypeHasOrbitOfTwelve) {
  const auto t = Theta(7, 1, 2, {{{3, 4, 5}, {6}, {7}}});
  std::set<MarkedThetaType> orbit;
  for (const auto& g : ThetaSymmetry::all()) orbit.insert(g.apply(t));
  EXPECT_EQ(orbit.size(), 12u);
  EXPECT_EQ(stabilizer_order(t), 1);
  const auto canon = canonicalize(t).type;
  EXPECT_TRUE(orbit.count(canon));
  for (const auto& image : orbit) EXPECT_EQ(canonicalize(image).type, canon);
}

TEST(Canonicalize, OrbitMinimumMatchesBruteForce) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = RandomType(rng);
    std::vector<MarkedThetaType> orbit;
    for (const auto& g : ThetaSymmetry::all()) orbit.push_back(g.apply(t));
    const auto canon = canonicalize(t).type;
    EXPECT_NE(std::find(orbit.begin(), orbit.end(), canon), orbit.end());
    for (const auto& image : orbit) {
      EXPECT_FALSE(detail::canonical_key(image) < detail::canonical_key(canon));
    }
  }
}

TEST(ThetaSymmetry, GroupIsClosedUnderInverse) {
  const auto t = Theta(7, 1, 2, {{{3, 4, 5}, {6}, {7}}});
  for (const auto& g : ThetaSymmetry::all()) {
    EXPECT_EQ(g.inverse().apply(g.apply(t)), t);
    for (const auto& e : t.edges()) {
      EXPECT_EQ(g.inverse().apply(g.apply(e, t), g.apply(t)), e);
    }
  }
}

TEST(ThetaSymmetry, EdgeImageKeepsEndpointLabels) {
  const auto t = Theta(7, 1, 0, {{{3, 4, 5}, {6}, {2, 7}}});
  for (const auto& g : ThetaSymmetry::all()) {
    const auto image = g.apply(t);
    for (const auto& e : t.edges()) {
      const EdgeId f = g.apply(e, t);
      std::set<Label> ends_src{t.node_label(e.arc, e.pos), t.node_label(e.arc, e.pos + 1)};
      std::set<Label> ends_dst{image.node_label(f.arc, f.pos),
                               image.node_label(f.arc, f.pos + 1)};
      EXPECT_EQ(ends_src, ends_dst);
    }
  }
}

TEST(Properties, RandomTypes) {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto t = RandomType(rng);
    const auto canon = canonicalize(t);
    EXPECT_EQ(canonicalize(canon.type).type, canon.type);
    EXPECT_TRUE(is_canonical(canon.type));
    for (const auto& g : ThetaSymmetry::all()) {
      EXPECT_EQ(canonicalize(g.apply(t)).type, canon.type);
    }
    const auto cls = classify(t);
    const auto cls_canon = classify(canon.type);
    EXPECT_EQ(cls.full, cls_canon.full);
    EXPECT_EQ(cls.sigma, cls_canon.sigma);

    for (const auto& e : t.edges()) {
      const auto out = contract(t, e);
      EXPECT_EQ(!out.is_bridge(), is_non_bridge_edge(t, e));
      if (out.is_bridge()) continue;
      const auto& r = out.result();
      std::array<std::vector<int>, 3> arcs;
      for (int a = 0; a < 3; ++a) {
        for (Label l : r.arc(a)) arcs[a].push_back(l);
      }
      EXPECT_NO_THROW(Theta(r.n(), r.vertex_mark(0), r.vertex_mark(1), arcs));
      EXPECT_EQ(r.n(), t.n());
      EXPECT_EQ(r.edge_count(), t.edge_count() - 1);
      EXPECT_EQ(out.parallel_pair_created(),
                r.empty_arc_count() == 2 && t.empty_arc_count() == 1);
      // Surviving edges map injectively onto the edges of the result.
      std::set<EdgeId> images;
      for (const auto& f : t.edges()) {
        if (f == e) continue;
        const auto m = out.map_edge(f);
        ASSERT_TRUE(m.has_value());
        EXPECT_TRUE(r.is_edge(*m));
        images.insert(*m);
      }
      EXPECT_EQ(static_cast<int>(images.size()), r.edge_count());
    }
  }
}

TEST(CyclicOrdering, DihedralRereadingsAgree) {
  const auto base = CyclicOrdering::from_labels({1, 3, 2, 5, 4});
  EXPECT_EQ(CyclicOrdering::from_labels({2, 5, 4, 1, 3}), base);
  EXPECT_EQ(CyclicOrdering::from_labels({4, 5, 2, 3, 1}), base);
  EXPECT_EQ(base.to_string(), "(1 3 2 5 4)");
}

TEST(CyclicOrdering, CountsHalfFactorial) {
  EXPECT_EQ(CyclicOrdering::all(4).size(), 3u);
  EXPECT_EQ(CyclicOrdering::all(5).size(), 12u);
  EXPECT_EQ(CyclicOrdering::all(6).size(), 60u);
  std::vector<std::string> names;
  for (const auto& s : CyclicOrdering::all(4)) names.push_back(s.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"(1 2 3 4)", "(1 2 4 3)", "(1 3 2 4)"}));
}

}  // namespace
}  // namespace tropdelta
