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

// Decorated cells and the vertex orderings that orient them.
//
// A type with a parallel pair (two empty arcs e, e') carries a decoration:
// LessEq gives the simplex {l(e) <= l(e')}, Equal gives {l(e) = l(e')}.
// Its simplex vertices are the indicator functions of the singleton edges,
// the midpoint (l_e + l_e')/2 and, for LessEq, the indicator of the larger
// edge. Since the exchange of e and e' is an automorphism, the larger and
// midpoint vertices are tracked abstractly rather than by edge.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropdelta/errors.hpp"
#include "tropdelta/theta_type.hpp"

namespace tropdelta {

enum class Decoration : std::uint8_t { kTrivial = 0, kLessEq = 1, kEqual = 2 };

inline const char* to_string(Decoration d) {
  switch (d) {
    case Decoration::kTrivial:
      return "trivial";
    case Decoration::kLessEq:
      return "le";
    case Decoration::kEqual:
      return "eq";
  }
  return "?";
}

struct DecoratedCell {
  MarkedThetaType type;
  Decoration decoration = Decoration::kTrivial;

  int dimension() const {
    return type.edge_count() - 1 - (decoration == Decoration::kEqual ? 1 : 0);
  }

  std::string to_string() const {
    std::string s = type.to_string();
    if (decoration != Decoration::kTrivial) {
      s += decoration == Decoration::kLessEq ? " <=" : " =";
    }
    return s;
  }

  friend auto operator<=>(const DecoratedCell&, const DecoratedCell&) = default;
};

// Cells over one canonical type: one trivially decorated cell, or the LessEq
// and Equal cells when the type has a parallel pair.
inline std::vector<DecoratedCell> cells_over(const MarkedThetaType& t) {
  if (t.has_parallel_pair()) {
    return {{t, Decoration::kLessEq}, {t, Decoration::kEqual}};
  }
  return {{t, Decoration::kTrivial}};
}

struct SimplexVertex {
  enum class Kind : std::uint8_t { kEdge, kLarger, kMidpoint };

  Kind kind = Kind::kEdge;
  EdgeId edge{};  // meaningful for kEdge only

  static SimplexVertex of_edge(EdgeId e) { return {Kind::kEdge, e}; }
  static SimplexVertex larger() { return {Kind::kLarger, {}}; }
  static SimplexVertex midpoint() { return {Kind::kMidpoint, {}}; }

  friend auto operator<=>(const SimplexVertex&, const SimplexVertex&) = default;
};

// Choice of vertex order for every cell. The default orders cyclic cells by
// the reading-order rule below and full cells arc by arc. A shuffle seed
// replaces the order of each full cell (and, if requested, each cyclic
// cell) by a seeded permutation of it, keyed on the cell itself.
struct OrientationConvention {
  std::optional<std::uint64_t> shuffle_seed;
  bool shuffle_cyclic = false;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t cell_hash(const DecoratedCell& c, std::uint64_t seed) {
  std::uint64_t h = splitmix64(seed);
  auto mix = [&](std::uint64_t v) { h = splitmix64(h ^ v); };
  mix(c.type.n());
  mix(c.type.vertex_mark(0));
  mix(c.type.vertex_mark(1));
  for (int a = 0; a < 3; ++a) {
    mix(0x100 + c.type.arc_length(a));
    for (Label l : c.type.arc(a)) mix(l);
  }
  mix(static_cast<std::uint64_t>(c.decoration));
  return h;
}

inline void push_arc_edges(std::vector<SimplexVertex>& out,
                           const MarkedThetaType& t, int arc, bool reversed) {
  const int len = t.arc_length(arc);
  for (int i = 0; i <= len; ++i) {
    const int pos = reversed ? len - i : i;
    out.push_back(SimplexVertex::of_edge(
        {static_cast<std::uint8_t>(arc), static_cast<std::uint8_t>(pos)}));
  }
}

// Cyclic cell orientation. The oriented cycle is drawn with one trivalent
// vertex on the left, marks along the top arc left to right, the right
// vertex, then marks along the bottom arc right to left; the empty middle
// arc sits between. Edges are listed in reading order: top arc, middle arc,
// bottom arc, each left to right. Of the two drawings (rotations by half a
// turn) we take the one whose (left vertex marked, top count) is larger,
// breaking ties by the smaller first label on the top arc.
//
// For a cell with a parallel pair the vertices are (larger, midpoint) or
// (midpoint) followed by the edges of the marked arc in cyclic direction.
inline std::vector<SimplexVertex> cyclic_vertex_order(const DecoratedCell& c,
                                                      const CyclicOrdering& sigma) {
  const MarkedThetaType& t = c.type;
  std::vector<SimplexVertex> out;
  out.reserve(t.edge_count());
  if (t.has_parallel_pair()) {
    int arc = 0;
    while (t.arc_length(arc) == 0) ++arc;
    auto word = t.arc(arc);
    const bool forward = sigma.runs_forward(word[0], word[1]);
    if (c.decoration == Decoration::kLessEq) out.push_back(SimplexVertex::larger());
    out.push_back(SimplexVertex::midpoint());
    push_arc_edges(out, t, arc, !forward);
    return out;
  }

  const CycleArcs ca = cycle_arcs(t);
  const auto word = cycle_word(t, ca);
  const bool forward = sigma.runs_forward(word[0], word[1]);
  // x is the arc the oriented cycle takes when leaving u.
  const int x = forward ? ca.first : ca.second;
  const int y = forward ? ca.second : ca.first;
  const int eu = t.vertex_marked(0) ? 1 : 0;
  const int ev = t.vertex_marked(1) ? 1 : 0;
  // Drawing 1: left = u, top = x (stored order), bottom = y (stored order).
  // Drawing 2: left = v, top = y reversed, bottom = x reversed.
  bool first_drawing;
  if (std::pair(eu, t.arc_length(x)) != std::pair(ev, t.arc_length(y))) {
    first_drawing = std::pair(eu, t.arc_length(x)) > std::pair(ev, t.arc_length(y));
  } else {
    first_drawing = t.arc(x).front() < t.arc(y).back();
  }
  if (first_drawing) {
    push_arc_edges(out, t, x, false);
    push_arc_edges(out, t, ca.middle, false);
    push_arc_edges(out, t, y, false);
  } else {
    push_arc_edges(out, t, y, true);
    push_arc_edges(out, t, ca.middle, false);
    push_arc_edges(out, t, x, true);
  }
  return out;
}

}  // namespace detail

// Ordered vertex list of the simplex of a canonical cell.
inline std::vector<SimplexVertex> vertex_order(
    const DecoratedCell& c, const OrientationConvention& convention = {}) {
  const Classification cls = classify(c.type);
  std::vector<SimplexVertex> out;
  if (cls.full) {
    out.reserve(c.type.edge_count());
    for (int a = 0; a < 3; ++a) detail::push_arc_edges(out, c.type, a, false);
  } else {
    out = detail::cyclic_vertex_order(c, *cls.sigma);
  }
  if (convention.shuffle_seed && (cls.full || convention.shuffle_cyclic)) {
    std::uint64_t state = detail::cell_hash(c, *convention.shuffle_seed);
    for (std::size_t i = out.size(); i > 1; --i) {
      state = detail::splitmix64(state);
      std::swap(out[i - 1], out[state % i]);
    }
  }
  return out;
}

}  // namespace tropdelta
