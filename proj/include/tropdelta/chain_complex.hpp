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

// Cellular boundary operator on decorated theta cells and the sparse
// boundary matrices of the complexes built from them.
//
// Facets of a cell come from dropping one simplex vertex. Dropping an edge
// vertex contracts that edge; dropping the larger-edge vertex of a LessEq
// cell gives the Equal cell; dropping the midpoint sends the facet into the
// bridge locus. Facets in the bridge locus are collapsed to the base point,
// which sits in degree 0 and never receives entries here.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tropdelta/cell.hpp"
#include "tropdelta/enumeration.hpp"
#include "tropdelta/errors.hpp"
#include "tropdelta/parallel.hpp"
#include "tropdelta/sparse_matrix.hpp"
#include "tropdelta/theta_type.hpp"

namespace tropdelta {

struct BoundaryTerm {
  DecoratedCell target;
  int coefficient = 0;

  friend bool operator==(const BoundaryTerm&, const BoundaryTerm&) = default;
};

// Sign of the permutation taking position i to perm[i].
inline int permutation_parity(std::vector<int> perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    while (perm[i] != static_cast<int>(i)) {
      std::swap(perm[i], perm[perm[i]]);
      sign = -sign;
    }
  }
  return sign;
}

namespace detail {

// Adds (-1)^omitted times the parity of the reordering that takes the
// inherited facet vertices to the target's own vertex order.
inline void emit_facet(std::vector<BoundaryTerm>& out, const DecoratedCell& target,
                       const std::vector<SimplexVertex>& inherited, std::size_t omitted,
                       const OrientationConvention& convention, const DecoratedCell& source) {
  const auto order = vertex_order(target, convention);
  if (order.size() != inherited.size()) {
    throw ContractViolation("boundary: facet of " + source.to_string() + " has " +
                            std::to_string(inherited.size()) + " vertices but " +
                            target.to_string() + " has " + std::to_string(order.size()));
  }
  std::vector<int> perm(inherited.size(), -1);
  std::vector<char> used(order.size(), 0);
  for (std::size_t i = 0; i < inherited.size(); ++i) {
    auto it = std::find(order.begin(), order.end(), inherited[i]);
    if (it == order.end() || used[it - order.begin()]) {
      throw ContractViolation("boundary: facet vertices of " + source.to_string() +
                              " do not match the vertices of " + target.to_string());
    }
    used[it - order.begin()] = 1;
    perm[i] = static_cast<int>(it - order.begin());
  }
  const int sign = (omitted % 2 == 0 ? 1 : -1) * permutation_parity(std::move(perm));
  out.push_back({target, sign});
}

}  // namespace detail

// Signed cellular boundary of a canonical cell. Terms into the bridge locus
// are omitted, as is the contraction of the last interior mark off an arc
// next to an existing empty arc: that facet is the union of two simplices of
// the new pair type whose contributions cancel. Coefficients of repeated
// targets are summed and zero sums dropped; the result is sorted by target.
inline std::vector<BoundaryTerm> boundary(const DecoratedCell& cell,
                                          const OrientationConvention& convention = {}) {
  if (!is_canonical(cell.type)) {
    throw ContractViolation("boundary: non-canonical input " + cell.to_string());
  }
  if (cell.type.has_parallel_pair() == (cell.decoration == Decoration::kTrivial)) {
    throw ContractViolation("boundary: decoration does not fit " + cell.to_string());
  }
  const auto vertices = vertex_order(cell, convention);
  std::vector<BoundaryTerm> raw;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const SimplexVertex& dropped = vertices[i];
    if (dropped.kind == SimplexVertex::Kind::kMidpoint) continue;
    std::vector<SimplexVertex> rest;
    rest.reserve(vertices.size() - 1);
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (j != i) rest.push_back(vertices[j]);
    }
    if (dropped.kind == SimplexVertex::Kind::kLarger) {
      detail::emit_facet(raw, {cell.type, Decoration::kEqual}, rest, i, convention, cell);
      continue;
    }
    const ContractionOutcome outcome = contract(cell.type, dropped.edge);
    if (outcome.is_bridge() || outcome.parallel_pair_created()) continue;
    const CanonicalForm canon = canonicalize(outcome.result());
    for (auto& v : rest) {
      if (v.kind != SimplexVertex::Kind::kEdge) continue;
      const auto mapped = outcome.map_edge(v.edge);
      if (!mapped) throw ContractViolation("boundary: lost edge in " + cell.to_string());
      v.edge = canon.relabel.apply(*mapped, outcome.result());
    }
    detail::emit_facet(raw, {canon.type, cell.decoration}, rest, i, convention, cell);
  }
  std::sort(raw.begin(), raw.end(), [](const BoundaryTerm& a, const BoundaryTerm& b) {
    return a.target < b.target;
  });
  std::vector<BoundaryTerm> out;
  for (const auto& term : raw) {
    if (!out.empty() && out.back().target == term.target) {
      out.back().coefficient += term.coefficient;
    } else {
      out.push_back(term);
    }
  }
  std::erase_if(out, [](const BoundaryTerm& t) { return t.coefficient == 0; });
  for (const auto& t : out) {
    if (t.coefficient > 1 || t.coefficient < -1) {
      throw ContractViolation("boundary: coefficient " + std::to_string(t.coefficient) +
                              " from " + cell.to_string() + " to " + t.target.to_string());
    }
  }
  return out;
}

enum class ComplexVariant { kFullDelta, kCyclicSigma, kCyclicAll, kFullRelCyclic };

inline const char* to_string(ComplexVariant v) {
  switch (v) {
    case ComplexVariant::kFullDelta:
      return "full";
    case ComplexVariant::kCyclicSigma:
      return "cyclic-sigma";
    case ComplexVariant::kCyclicAll:
      return "cyclic-all";
    case ComplexVariant::kFullRelCyclic:
      return "full-rel-cyclic";
  }
  return "?";
}

inline ComplexVariant parse_variant(const std::string& s) {
  for (auto v : {ComplexVariant::kFullDelta, ComplexVariant::kCyclicSigma,
                 ComplexVariant::kCyclicAll, ComplexVariant::kFullRelCyclic}) {
    if (s == to_string(v)) return v;
  }
  throw InputError("unknown complex variant '" + s +
                   "' (expected full, cyclic-sigma, cyclic-all or full-rel-cyclic)");
}

class ChainComplex;

// Builds the cells of a complex and its boundary matrices, all degrees or
// only those listed in `degrees`. Columns are computed independently and
// assembled in cell order, so the result does not depend on scheduling.
inline ChainComplex build_complex(int n, ComplexVariant variant,
                                  const std::optional<CyclicOrdering>& sigma = std::nullopt,
                                  const OrientationConvention& convention = {},
                                  const std::optional<std::set<int>>& degrees = std::nullopt);

// Reduced cellular chain complex with the base point left implicit. Degree d
// holds the sorted cells of dimension d; d(d) maps degree d to degree d-1
// with rows indexed by the degree d-1 cells.
class ChainComplex {
 public:
  int n() const { return n_; }
  ComplexVariant variant() const { return variant_; }
  const std::optional<CyclicOrdering>& sigma() const { return sigma_; }
  int min_degree() const { return n_ - 1; }
  int max_degree() const { return n_ + 2; }

  const std::vector<DecoratedCell>& cells(int degree) const {
    static const std::vector<DecoratedCell> kEmpty;
    auto it = cells_.find(degree);
    return it == cells_.end() ? kEmpty : it->second;
  }
  std::int64_t cell_count(int degree) const {
    return static_cast<std::int64_t>(cells(degree).size());
  }

  bool has_boundary(int degree) const { return boundary_.count(degree) > 0; }
  const SparseIntMatrix& d(int degree) const {
    auto it = boundary_.find(degree);
    if (it == boundary_.end()) {
      throw InputError("ChainComplex: boundary in degree " + std::to_string(degree) +
                       " was not built");
    }
    return it->second;
  }

  // Index of a cell within its degree, if present.
  std::optional<std::int32_t> index_of(const DecoratedCell& c) const {
    const auto& list = cells(c.dimension());
    auto it = std::lower_bound(list.begin(), list.end(), c);
    if (it == list.end() || !(*it == c)) return std::nullopt;
    return static_cast<std::int32_t>(it - list.begin());
  }

 private:
  friend ChainComplex build_complex(int, ComplexVariant, const std::optional<CyclicOrdering>&,
                                    const OrientationConvention&,
                                    const std::optional<std::set<int>>&);
  int n_ = 0;
  ComplexVariant variant_ = ComplexVariant::kFullDelta;
  std::optional<CyclicOrdering> sigma_;
  std::map<int, std::vector<DecoratedCell>> cells_;
  std::map<int, SparseIntMatrix> boundary_;
};

inline ChainComplex build_complex(int n, ComplexVariant variant,
                                  const std::optional<CyclicOrdering>& sigma,
                                  const OrientationConvention& convention,
                                  const std::optional<std::set<int>>& degrees) {
  require_supported_n(n, "build_complex");
  ChainComplex cx;
  cx.n_ = n;
  cx.variant_ = variant;
  CellClass cls = CellClass::kAll;
  switch (variant) {
    case ComplexVariant::kFullDelta:
      cls = CellClass::kAll;
      break;
    case ComplexVariant::kCyclicSigma:
      if (!sigma) throw InputError("build_complex: cyclic-sigma needs an ordering");
      if (sigma->n() != n) throw InputError("build_complex: ordering size mismatch");
      cx.sigma_ = sigma;
      cls = CellClass::kCyclicSigma;
      break;
    case ComplexVariant::kCyclicAll:
      cls = CellClass::kCyclicAll;
      break;
    case ComplexVariant::kFullRelCyclic:
      cls = CellClass::kFull;
      break;
  }
  for (auto& c : enumerate_cells(n, cls, cx.sigma_)) {
    const int dim = c.dimension();
    cx.cells_[dim].push_back(std::move(c));
  }
  const bool drop_cyclic = variant == ComplexVariant::kFullRelCyclic;
  for (int deg = cx.min_degree(); deg <= cx.max_degree(); ++deg) {
    if (degrees && !degrees->count(deg)) continue;
    const auto& cols = cx.cells(deg);
    const auto& rows = cx.cells(deg - 1);
    std::vector<std::vector<Triplet>> column(cols.size());
    parallel_for(cols.size(), [&](std::size_t j) {
      for (const auto& term : boundary(cols[j], convention)) {
        if (drop_cyclic && !term.target.type.is_full()) continue;
        auto it = std::lower_bound(rows.begin(), rows.end(), term.target);
        if (it == rows.end() || !(*it == term.target)) {
          throw ContractViolation("build_complex: boundary of " + cols[j].to_string() +
                                  " reaches " + term.target.to_string() +
                                  ", which is not a cell of the " + to_string(variant) +
                                  " complex");
        }
        column[j].push_back({static_cast<std::int32_t>(it - rows.begin()),
                             static_cast<std::int32_t>(j), term.coefficient});
      }
    });
    std::vector<Triplet> all;
    for (auto& c : column) all.insert(all.end(), c.begin(), c.end());
    cx.boundary_.emplace(deg, SparseIntMatrix::from_triplets(
                                  static_cast<std::int32_t>(rows.size()),
                                  static_cast<std::int32_t>(cols.size()), std::move(all)));
  }
  return cx;
}

// Degrees d for which d(d-1) * d(d) is nonzero; empty means the complex is
// a chain complex wherever both maps were built.
inline std::vector<int> failing_dd_degrees(const ChainComplex& cx) {
  std::vector<int> bad;
  for (int deg = cx.min_degree() + 1; deg <= cx.max_degree(); ++deg) {
    if (!cx.has_boundary(deg) || !cx.has_boundary(deg - 1)) continue;
    if (!cx.d(deg - 1).multiply(cx.d(deg)).is_zero()) bad.push_back(deg);
  }
  return bad;
}

inline nlohmann::json cells_to_json(const std::vector<DecoratedCell>& cells) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : cells) out.push_back(to_json(c));
  return out;
}

}  // namespace tropdelta
