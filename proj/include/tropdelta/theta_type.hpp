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

// Marked theta types: the genus-2 theta graph (two trivalent vertices u, v
// joined by three arcs) with n distinct markings placed on the vertices and
// on arc interiors. An arc is stored as the word of its interior labels read
// from u to v.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "tropdelta/errors.hpp"

namespace tropdelta {

using Label = std::uint8_t;

inline constexpr int kMaxMarkings = 15;
inline constexpr Label kNoMark = 0;

// Edge of a marked theta type: the pos-th edge along arc `arc`, counted from
// u. An arc with k interior marks has edges 0..k.
struct EdgeId {
  std::uint8_t arc = 0;
  std::uint8_t pos = 0;

  friend constexpr auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

class MarkedThetaType {
 public:
  MarkedThetaType() = default;

  // Validating constructor. Vertex marks use 0 for "unmarked".
  static MarkedThetaType make(int n, int u_mark, int v_mark,
                              const std::array<std::vector<int>, 3>& arcs) {
    if (n < 1 || n > kMaxMarkings) {
      throw InputError("marked theta type: n = " + std::to_string(n) +
                       " outside 1.." + std::to_string(kMaxMarkings));
    }
    std::vector<int> seen(n + 1, 0);
    auto note = [&](int label) {
      if (label < 1 || label > n) {
        throw InputError("marked theta type: label " + std::to_string(label) +
                         " outside 1.." + std::to_string(n));
      }
      if (seen[label]++ != 0) {
        throw InputError("marked theta type: label " + std::to_string(label) +
                         " repeated");
      }
    };
    if (u_mark != 0) note(u_mark);
    if (v_mark != 0) note(v_mark);
    for (const auto& arc : arcs) {
      for (int label : arc) note(label);
    }
    for (int label = 1; label <= n; ++label) {
      if (seen[label] == 0) {
        throw InputError("marked theta type: label " + std::to_string(label) +
                         " missing");
      }
    }
    int empty = 0;
    for (const auto& arc : arcs) empty += arc.empty() ? 1 : 0;
    if (empty == 3) {
      throw InputError("marked theta type: all three arcs are empty");
    }
    MarkedThetaType t;
    t.n_ = static_cast<std::uint8_t>(n);
    t.marks_ = {static_cast<Label>(u_mark), static_cast<Label>(v_mark)};
    int offset = 0;
    for (int i = 0; i < 3; ++i) {
      t.len_[i] = static_cast<std::uint8_t>(arcs[i].size());
      for (int label : arcs[i]) t.labels_[offset++] = static_cast<Label>(label);
    }
    return t;
  }

  // Unchecked construction from raw parts; callers guarantee validity.
  static MarkedThetaType from_parts(int n, std::array<Label, 2> marks,
                                    std::array<std::uint8_t, 3> lengths,
                                    std::span<const Label> labels) {
    MarkedThetaType t;
    t.n_ = static_cast<std::uint8_t>(n);
    t.marks_ = marks;
    t.len_ = lengths;
    std::copy(labels.begin(), labels.end(), t.labels_.begin());
    return t;
  }

  int n() const { return n_; }

  // vertex 0 is u, vertex 1 is v.
  Label vertex_mark(int vertex) const { return marks_[vertex]; }
  bool vertex_marked(int vertex) const { return marks_[vertex] != kNoMark; }
  int marked_vertex_count() const {
    return (vertex_marked(0) ? 1 : 0) + (vertex_marked(1) ? 1 : 0);
  }

  std::span<const Label> arc(int i) const {
    return {labels_.data() + offset(i), len_[i]};
  }
  int arc_length(int i) const { return len_[i]; }
  std::array<std::uint8_t, 3> arc_lengths() const { return len_; }
  std::span<const Label> interior_labels() const {
    return {labels_.data(), static_cast<std::size_t>(len_[0] + len_[1] + len_[2])};
  }

  int edge_count() const { return n_ - marked_vertex_count() + 3; }
  int empty_arc_count() const {
    return (len_[0] == 0) + (len_[1] == 0) + (len_[2] == 0);
  }
  bool has_parallel_pair() const { return empty_arc_count() == 2; }
  bool is_full() const { return empty_arc_count() == 0; }

  bool is_edge(EdgeId e) const { return e.arc < 3 && e.pos <= len_[e.arc]; }

  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> out;
    out.reserve(edge_count());
    for (std::uint8_t a = 0; a < 3; ++a) {
      for (std::uint8_t p = 0; p <= len_[a]; ++p) out.push_back({a, p});
    }
    return out;
  }

  // Label at node `index` along arc `a`: index 0 is u, index len+1 is v.
  Label node_label(int a, int index) const {
    if (index == 0) return marks_[0];
    if (index == len_[a] + 1) return marks_[1];
    return labels_[offset(a) + index - 1];
  }

  std::string to_string() const {
    std::ostringstream os;
    auto mark = [&](int vertex) {
      if (vertex_marked(vertex)) {
        os << int(marks_[vertex]);
      } else {
        os << '-';
      }
    };
    mark(0);
    os << " [";
    for (int a = 0; a < 3; ++a) {
      if (a > 0) os << "|";
      bool first = true;
      for (Label l : arc(a)) {
        if (!first) os << ' ';
        os << int(l);
        first = false;
      }
    }
    os << "] ";
    mark(1);
    return os.str();
  }

  friend auto operator<=>(const MarkedThetaType&,
                          const MarkedThetaType&) = default;

 private:
  int offset(int i) const {
    int o = 0;
    for (int j = 0; j < i; ++j) o += len_[j];
    return o;
  }

  std::uint8_t n_ = 0;
  std::array<Label, 2> marks_{};
  std::array<std::uint8_t, 3> len_{};
  std::array<Label, kMaxMarkings> labels_{};
};

// Shape of a theta type: vertex-marking indicators and arc interior counts,
// each sorted in decreasing order.
struct ThetaForm {
  int eps1 = 0;
  int eps2 = 0;
  std::array<int, 3> k{};

  friend auto operator<=>(const ThetaForm&, const ThetaForm&) = default;
};

inline ThetaForm form_of(const MarkedThetaType& t) {
  ThetaForm f;
  f.eps1 = t.vertex_marked(0) ? 1 : 0;
  f.eps2 = t.vertex_marked(1) ? 1 : 0;
  if (f.eps1 < f.eps2) std::swap(f.eps1, f.eps2);
  for (int a = 0; a < 3; ++a) f.k[a] = t.arc_length(a);
  std::sort(f.k.begin(), f.k.end(), std::greater<>());
  return f;
}

// Element of the order-12 automorphism group of the unmarked theta graph:
// an optional exchange of u and v (which reverses every arc word) followed
// by sending arc i to slot arc_image[i].
struct ThetaSymmetry {
  std::array<std::uint8_t, 3> arc_image{0, 1, 2};
  bool swap_vertices = false;

  MarkedThetaType apply(const MarkedThetaType& t) const {
    std::array<Label, 2> marks{t.vertex_mark(0), t.vertex_mark(1)};
    if (swap_vertices) std::swap(marks[0], marks[1]);
    std::array<std::uint8_t, 3> lengths{};
    for (int a = 0; a < 3; ++a) lengths[arc_image[a]] = t.arc_lengths()[a];
    std::array<int, 3> offsets{0, lengths[0], lengths[0] + lengths[1]};
    std::array<Label, kMaxMarkings> labels{};
    for (int a = 0; a < 3; ++a) {
      auto src = t.arc(a);
      Label* dst = labels.data() + offsets[arc_image[a]];
      if (swap_vertices) {
        std::reverse_copy(src.begin(), src.end(), dst);
      } else {
        std::copy(src.begin(), src.end(), dst);
      }
    }
    return MarkedThetaType::from_parts(t.n(), marks, lengths, labels);
  }

  // Image of an edge of `source` under this symmetry.
  EdgeId apply(EdgeId e, const MarkedThetaType& source) const {
    std::uint8_t pos = e.pos;
    if (swap_vertices) {
      pos = static_cast<std::uint8_t>(source.arc_length(e.arc) - e.pos);
    }
    return {arc_image[e.arc], pos};
  }

  ThetaSymmetry inverse() const {
    ThetaSymmetry inv;
    inv.swap_vertices = swap_vertices;
    for (std::uint8_t a = 0; a < 3; ++a) inv.arc_image[arc_image[a]] = a;
    return inv;
  }

  static const std::array<ThetaSymmetry, 12>& all() {
    static const std::array<ThetaSymmetry, 12> group = [] {
      std::array<ThetaSymmetry, 12> g{};
      std::array<std::uint8_t, 3> perm{0, 1, 2};
      int i = 0;
      do {
        for (bool swap : {false, true}) {
          g[i].arc_image = perm;
          g[i].swap_vertices = swap;
          ++i;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return g;
    }();
    return group;
  }

  friend auto operator<=>(const ThetaSymmetry&, const ThetaSymmetry&) = default;
};

namespace detail {

// Ordering key for canonical representatives. Smaller is preferred:
// u marked before v marked, arcs by decreasing length, then labels
// lexicographically (u mark, v mark, arc words in slot order).
using CanonicalKey = std::array<std::uint8_t, 7 + kMaxMarkings>;

inline CanonicalKey canonical_key(const MarkedThetaType& t) {
  CanonicalKey key{};
  key[0] = t.vertex_marked(0) ? 0 : 1;
  key[1] = t.vertex_marked(1) ? 0 : 1;
  for (int a = 0; a < 3; ++a) {
    key[2 + a] = static_cast<std::uint8_t>(255 - t.arc_length(a));
  }
  key[5] = t.vertex_mark(0);
  key[6] = t.vertex_mark(1);
  auto labels = t.interior_labels();
  std::copy(labels.begin(), labels.end(), key.begin() + 7);
  return key;
}

}  // namespace detail

struct CanonicalForm {
  MarkedThetaType type;
  // Symmetry sending the input to `type`.
  ThetaSymmetry relabel;
};

// Lexicographically least representative of the automorphism orbit of `t`
// (see detail::canonical_key for the order), with the group element used.
// When the stabilizer is nontrivial the first minimizing element in
// ThetaSymmetry::all() order is returned.
inline CanonicalForm canonicalize(const MarkedThetaType& t) {
  const auto& group = ThetaSymmetry::all();
  CanonicalForm best{t, group[0]};
  auto best_key = detail::canonical_key(t);
  for (std::size_t i = 1; i < group.size(); ++i) {
    MarkedThetaType image = group[i].apply(t);
    auto key = detail::canonical_key(image);
    if (key < best_key) {
      best_key = key;
      best = {image, group[i]};
    }
  }
  return best;
}

inline bool is_canonical(const MarkedThetaType& t) {
  const auto& group = ThetaSymmetry::all();
  const auto key = detail::canonical_key(t);
  for (std::size_t i = 1; i < group.size(); ++i) {
    if (detail::canonical_key(group[i].apply(t)) < key) return false;
  }
  return true;
}

// Number of group elements fixing `t`.
inline int stabilizer_order(const MarkedThetaType& t) {
  int count = 0;
  for (const auto& g : ThetaSymmetry::all()) count += (g.apply(t) == t);
  return count;
}

// Oriented cyclic ordering of {1..n}, stored as the reading that starts at 1
// and whose second entry is smaller than its last. This picks one of the two
// orientations of each unoriented cyclic order.
class CyclicOrdering {
 public:
  CyclicOrdering() = default;

  // Canonicalizes any rotation or reflection of a cyclic word.
  static CyclicOrdering from_sequence(std::span<const Label> seq) {
    const int n = static_cast<int>(seq.size());
    CyclicOrdering c;
    c.order_.resize(n);
    auto one = std::find(seq.begin(), seq.end(), Label{1});
    if (one == seq.end()) throw InputError("cyclic ordering: label 1 missing");
    const int start = static_cast<int>(one - seq.begin());
    for (int i = 0; i < n; ++i) c.order_[i] = seq[(start + i) % n];
    if (n >= 3 && c.order_[1] > c.order_[n - 1]) {
      std::reverse(c.order_.begin() + 1, c.order_.end());
    }
    c.build_successors();
    return c;
  }

  static CyclicOrdering from_labels(std::initializer_list<int> labels) {
    std::vector<Label> seq(labels.begin(), labels.end());
    return from_sequence(seq);
  }

  // All (n-1)!/2 cyclic orderings of {1..n}, n >= 3, in sorted order.
  static std::vector<CyclicOrdering> all(int n) {
    std::vector<CyclicOrdering> out;
    std::vector<Label> rest(n - 1);
    std::iota(rest.begin(), rest.end(), Label{2});
    do {
      if (rest.front() < rest.back()) {
        std::vector<Label> seq{1};
        seq.insert(seq.end(), rest.begin(), rest.end());
        out.push_back(from_sequence(seq));
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
  }

  int n() const { return static_cast<int>(order_.size()); }
  const std::vector<Label>& order() const { return order_; }
  Label successor(Label x) const { return succ_[x]; }

  // True when `seq` (a window of at least two cyclically consecutive labels)
  // runs in the stored orientation.
  bool runs_forward(Label first, Label second) const {
    return succ_[first] == second;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (i > 0) os << ' ';
      os << int(order_[i]);
    }
    os << ')';
    return os.str();
  }

  friend bool operator==(const CyclicOrdering& a, const CyclicOrdering& b) {
    return a.order_ == b.order_;
  }
  friend auto operator<=>(const CyclicOrdering& a, const CyclicOrdering& b) {
    return a.order_ <=> b.order_;
  }

 private:
  void build_successors() {
    succ_.assign(order_.size() + 1, 0);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      succ_[order_[i]] = order_[(i + 1) % order_.size()];
    }
  }

  std::vector<Label> order_;
  std::vector<Label> succ_;
};

struct Classification {
  bool full = false;
  // Set exactly when the type is cyclic.
  std::optional<CyclicOrdering> sigma;
};

namespace detail {

// For a type with an empty arc: the arc index treated as the "middle" arc
// (the cycle avoids it) and the two arcs forming the cycle.
struct CycleArcs {
  int middle;
  int first;
  int second;
};

inline CycleArcs cycle_arcs(const MarkedThetaType& t) {
  // Prefer an empty middle arc with the highest index so that, for types
  // with a parallel pair, the cycle uses the nonempty arc.
  for (int z = 2; z >= 0; --z) {
    if (t.arc_length(z) == 0) {
      std::array<int, 2> others{};
      int j = 0;
      for (int a = 0; a < 3; ++a) {
        if (a != z) others[j++] = a;
      }
      return {z, others[0], others[1]};
    }
  }
  throw ContractViolation("cycle_arcs: full theta type has no cycle through all marks");
}

// Labels met along the cycle u -> first arc -> v -> second arc -> u.
inline std::vector<Label> cycle_word(const MarkedThetaType& t,
                                     const CycleArcs& c) {
  std::vector<Label> seq;
  seq.reserve(t.n());
  if (t.vertex_marked(0)) seq.push_back(t.vertex_mark(0));
  for (Label l : t.arc(c.first)) seq.push_back(l);
  if (t.vertex_marked(1)) seq.push_back(t.vertex_mark(1));
  auto back = t.arc(c.second);
  for (auto it = back.rbegin(); it != back.rend(); ++it) seq.push_back(*it);
  return seq;
}

}  // namespace detail

// Full iff all three arc interiors are marked; otherwise the cyclic ordering
// read along the cycle through every marking.
inline Classification classify(const MarkedThetaType& t) {
  Classification c;
  if (t.is_full()) {
    c.full = true;
    return c;
  }
  c.sigma = CyclicOrdering::from_sequence(
      detail::cycle_word(t, detail::cycle_arcs(t)));
  return c;
}

class ContractionOutcome {
 public:
  enum class Kind { kBridge, kTheta };

  static ContractionOutcome bridge(EdgeId e) {
    ContractionOutcome o;
    o.kind_ = Kind::kBridge;
    o.contracted_ = e;
    return o;
  }
  static ContractionOutcome theta(EdgeId e, MarkedThetaType result,
                                  bool parallel_pair_created) {
    ContractionOutcome o;
    o.kind_ = Kind::kTheta;
    o.contracted_ = e;
    o.result_ = result;
    o.parallel_pair_created_ = parallel_pair_created;
    return o;
  }

  Kind kind() const { return kind_; }
  bool is_bridge() const { return kind_ == Kind::kBridge; }
  const MarkedThetaType& result() const { return result_; }
  bool parallel_pair_created() const { return parallel_pair_created_; }
  EdgeId contracted() const { return contracted_; }

  // Edge of the contracted type corresponding to a surviving source edge.
  std::optional<EdgeId> map_edge(EdgeId source) const {
    if (kind_ != Kind::kTheta || source == contracted_) return std::nullopt;
    if (source.arc != contracted_.arc) return source;
    if (contracted_.pos == 0) {
      return EdgeId{source.arc, static_cast<std::uint8_t>(source.pos - 1)};
    }
    return source;
  }

 private:
  Kind kind_ = Kind::kBridge;
  EdgeId contracted_{};
  MarkedThetaType result_{};
  bool parallel_pair_created_ = false;
};

// Contracts edge `e`. Bridge when both endpoints are marked (a repeated
// marking) or when `e` is the whole of an empty arc (u and v merge into a
// virtual cut vertex). Otherwise the end mark of the arc moves onto the
// adjacent unmarked trivalent vertex.
inline ContractionOutcome contract(const MarkedThetaType& t, EdgeId e) {
  if (!t.is_edge(e)) {
    throw InputError("contract: no edge (" + std::to_string(e.arc) + ", " +
                     std::to_string(e.pos) + ") in " + t.to_string());
  }
  const int len = t.arc_length(e.arc);
  if (len == 0) return ContractionOutcome::bridge(e);
  const Label left = t.node_label(e.arc, e.pos);
  const Label right = t.node_label(e.arc, e.pos + 1);
  if (left != kNoMark && right != kNoMark) return ContractionOutcome::bridge(e);

  // Exactly one endpoint is a trivalent vertex, and it is unmarked.
  const int vertex = (e.pos == 0) ? 0 : 1;
  std::array<Label, 2> marks{t.vertex_mark(0), t.vertex_mark(1)};
  std::array<std::uint8_t, 3> lengths = t.arc_lengths();
  std::array<Label, kMaxMarkings> labels{};
  int out = 0;
  for (int a = 0; a < 3; ++a) {
    auto word = t.arc(a);
    if (a == e.arc) {
      if (vertex == 0) {
        marks[0] = word.front();
        word = word.subspan(1);
      } else {
        marks[1] = word.back();
        word = word.first(word.size() - 1);
      }
      lengths[a] = static_cast<std::uint8_t>(word.size());
    }
    for (Label l : word) labels[out++] = l;
  }
  const bool pair_created = (len == 1) && t.empty_arc_count() == 1;
  return ContractionOutcome::theta(
      e, MarkedThetaType::from_parts(t.n(), marks, lengths, labels),
      pair_created);
}

// Closed-form predicate for non-bridge contractions: the first or last edge
// of a nonempty arc whose trivalent endpoint is unmarked.
inline bool is_non_bridge_edge(const MarkedThetaType& t, EdgeId e) {
  const int len = t.arc_length(e.arc);
  if (len == 0) return false;
  if (e.pos == 0) return !t.vertex_marked(0);
  if (e.pos == len) return !t.vertex_marked(1);
  return false;
}

}  // namespace tropdelta
