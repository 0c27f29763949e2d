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

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tropdelta/cell.hpp"
#include "tropdelta/errors.hpp"
#include "tropdelta/partitions.hpp"
#include "tropdelta/theta_type.hpp"

namespace tropdelta {

enum class CellClass {
  kCyclicSigma,  // cyclic cells inducing one given ordering
  kCyclicAll,
  kFull,
  kFullClosure,  // full cells plus the cyclic cells in their closure
  kAll,
};

// Cells in the closure of the full locus: the number of empty arcs does not
// exceed the number of marked trivalent vertices.
inline bool in_full_closure(const MarkedThetaType& t) {
  return t.empty_arc_count() <= t.marked_vertex_count();
}

// Every canonical theta type with n markings. Raw placements (vertex marks,
// then an ordering of the remaining labels cut into three arc words) are
// generated and kept when they are their own canonical form. Only vertex
// assignments and arc-length patterns that a canonical form can have are
// visited: u is marked whenever some vertex is, and lengths never increase.
inline std::vector<MarkedThetaType> enumerate_types(int n) {
  require_supported_n(n, "enumerate_types");
  if (n > kMaxMarkings) throw UnsupportedRange("enumerate_types: n too large");
  std::vector<MarkedThetaType> out;
  std::vector<Label> all(n);
  std::iota(all.begin(), all.end(), Label{1});
  auto emit_placements = [&](std::array<Label, 2> marks,
                             std::vector<Label> rest) {
    const int m = static_cast<int>(rest.size());
    std::vector<std::array<std::uint8_t, 3>> shapes;
    for (int k0 = m; k0 >= 0; --k0) {
      for (int k1 = std::min(k0, m - k0); k1 >= 0; --k1) {
        const int k2 = m - k0 - k1;
        if (k2 > k1) continue;
        if (k0 == 0) continue;  // three empty arcs
        shapes.push_back({static_cast<std::uint8_t>(k0),
                          static_cast<std::uint8_t>(k1),
                          static_cast<std::uint8_t>(k2)});
      }
    }
    std::sort(rest.begin(), rest.end());
    do {
      for (const auto& shape : shapes) {
        auto t = MarkedThetaType::from_parts(n, marks, shape, rest);
        if (is_canonical(t)) out.push_back(t);
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  };

  emit_placements({kNoMark, kNoMark}, all);
  for (Label u : all) {
    std::vector<Label> rest;
    for (Label l : all) {
      if (l != u) rest.push_back(l);
    }
    emit_placements({u, kNoMark}, rest);
    for (Label v : all) {
      if (v == u) continue;
      std::vector<Label> rest2;
      for (Label l : rest) {
        if (l != v) rest2.push_back(l);
      }
      emit_placements({u, v}, rest2);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Canonical cyclic types inducing `sigma`, generated directly by cutting the
// oriented circle into (u mark, first arc, v mark, second arc).
inline std::vector<MarkedThetaType> enumerate_cyclic_types(
    int n, const CyclicOrdering& sigma) {
  require_supported_n(n, "enumerate_cyclic_types");
  if (sigma.n() != n) throw InputError("enumerate_cyclic_types: ordering size mismatch");
  std::vector<MarkedThetaType> out;
  const auto& order = sigma.order();
  std::vector<Label> seq(n);
  for (int start = 0; start < n; ++start) {
    for (int dir : {1, -1}) {
      for (int i = 0; i < n; ++i) seq[i] = order[((start + dir * i) % n + n) % n];
      for (int eu = 0; eu <= 1; ++eu) {
        for (int ev = 0; ev <= 1; ++ev) {
          const int m = n - eu - ev;
          for (int k1 = 0; k1 <= m; ++k1) {
            const int k2 = m - k1;
            std::array<Label, 2> marks{kNoMark, kNoMark};
            std::array<Label, kMaxMarkings> labels{};
            int pos = 0;
            if (eu) marks[0] = seq[pos++];
            for (int i = 0; i < k1; ++i) labels[i] = seq[pos++];
            if (ev) marks[1] = seq[pos++];
            // second arc is read from u, i.e. against the cycle
            for (int i = 0; i < k2; ++i) labels[k1 + k2 - 1 - i] = seq[pos++];
            auto raw = MarkedThetaType::from_parts(
                n, marks,
                {static_cast<std::uint8_t>(k1), static_cast<std::uint8_t>(k2), 0},
                labels);
            out.push_back(canonicalize(raw).type);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Sorts by (dimension, cell); the order used to index matrices.
inline void sort_cells(std::vector<DecoratedCell>& cells) {
  std::sort(cells.begin(), cells.end(),
            [](const DecoratedCell& a, const DecoratedCell& b) {
              const int da = a.dimension();
              const int db = b.dimension();
              if (da != db) return da < db;
              return a < b;
            });
}

inline std::vector<DecoratedCell> enumerate_cells(
    int n, CellClass cls, const std::optional<CyclicOrdering>& sigma = std::nullopt) {
  require_supported_n(n, "enumerate_cells");
  std::vector<DecoratedCell> cells;
  if (cls == CellClass::kCyclicSigma) {
    if (!sigma) throw InputError("enumerate_cells: cyclic(sigma) needs an ordering");
    for (const auto& t : enumerate_cyclic_types(n, *sigma)) {
      for (const auto& c : cells_over(t)) cells.push_back(c);
    }
    sort_cells(cells);
    return cells;
  }
  for (const auto& t : enumerate_types(n)) {
    bool keep = false;
    switch (cls) {
      case CellClass::kCyclicAll:
        keep = !t.is_full();
        break;
      case CellClass::kFull:
        keep = t.is_full();
        break;
      case CellClass::kFullClosure:
        keep = in_full_closure(t);
        break;
      case CellClass::kAll:
        keep = true;
        break;
      case CellClass::kCyclicSigma:
        break;
    }
    if (!keep) continue;
    for (const auto& c : cells_over(t)) cells.push_back(c);
  }
  sort_cells(cells);
  return cells;
}

struct CellCensus {
  int n = 0;
  std::map<int, std::int64_t> cyclic_per_sigma;  // degree -> count
  std::map<int, std::int64_t> full;              // degree -> count
  std::int64_t sigma_count = 0;
};

// Tallies enumerated cells: cyclic cells for the ordering (1 2 ... n) and
// all full cells.
inline CellCensus census(int n) {
  require_supported_n(n, "census");
  CellCensus c;
  c.n = n;
  std::vector<Label> identity(n);
  std::iota(identity.begin(), identity.end(), Label{1});
  for (const auto& cell : enumerate_cells(n, CellClass::kCyclicSigma,
                                          CyclicOrdering::from_sequence(identity))) {
    ++c.cyclic_per_sigma[cell.dimension()];
  }
  for (const auto& cell : enumerate_cells(n, CellClass::kFull)) {
    ++c.full[cell.dimension()];
  }
  c.sigma_count = cyclic_ordering_count(n);
  return c;
}

inline nlohmann::json to_json(const CellCensus& c) {
  nlohmann::json cyc = nlohmann::json::object();
  for (auto [d, k] : c.cyclic_per_sigma) cyc[std::to_string(d)] = k;
  nlohmann::json full = nlohmann::json::object();
  for (auto [d, k] : c.full) full[std::to_string(d)] = k;
  return {{"n", c.n},
          {"cyclic_per_sigma", cyc},
          {"full", full},
          {"sigma_count", c.sigma_count}};
}

inline nlohmann::json to_json(const DecoratedCell& c) {
  const ThetaForm f = form_of(c.type);
  nlohmann::json arcs = nlohmann::json::array();
  for (int a = 0; a < 3; ++a) {
    nlohmann::json word = nlohmann::json::array();
    for (Label l : c.type.arc(a)) word.push_back(int(l));
    arcs.push_back(word);
  }
  nlohmann::json marks = nlohmann::json::array();
  for (int v = 0; v < 2; ++v) {
    if (c.type.vertex_marked(v)) {
      marks.push_back(int(c.type.vertex_mark(v)));
    } else {
      marks.push_back(nullptr);
    }
  }
  return {{"degree", c.dimension()},
          {"form", {f.eps1, f.eps2, f.k[0], f.k[1], f.k[2]}},
          {"arcs", arcs},
          {"vertex_marks", marks},
          {"decoration", to_string(c.decoration)}};
}

}  // namespace tropdelta
