// Copyright 2026 The Andrasfai Authors
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

#ifndef ANDRASFAI_AUT_ENGINE_H_
#define ANDRASFAI_AUT_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "andrasfai/graph.h"
#include "andrasfai/perm_group.h"
#include "andrasfai/permutation.h"
#include "json.hpp"

namespace andrasfai {

// Vertex coloring with color ids 0..c-1 numbered by the smallest vertex of
// each class.
class Coloring {
 public:
  // Any integer labels; renumbered into the canonical form.
  static Coloring from_colors(const std::vector<int>& colors);
  static Coloring uniform(int n);
  // Uniform except that each listed vertex gets its own color.
  static Coloring individualized(int n, const std::vector<Vertex>& singled_out);

  int order() const { return static_cast<int>(color_.size()); }
  int color(Vertex v) const { return color_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& colors() const { return color_; }
  // classes()[c] lists the vertices of color c in ascending order.
  const std::vector<std::vector<Vertex>>& classes() const { return classes_; }

  // Recolors so that p(v) gets the color v had.
  Coloring permuted(const Permutation& p) const;

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.color_ == b.color_;
  }

 private:
  std::vector<int> color_;
  std::vector<std::vector<Vertex>> classes_;
};

// True if any two vertices of one class have equally many neighbors in every
// class.
bool is_equitable(const Graph& g, const Coloring& c);

// Coarsest equitable coloring refining `initial`.
Coloring equitable_refinement(const Graph& g, const Coloring& initial);

struct SearchStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t automorphisms_found = 0;
  std::uint64_t max_depth = 0;
};

nlohmann::ordered_json to_json(const SearchStats& stats);

struct EngineOptions {
  // false: plain individualization with partial-map consistency checks and
  // no refinement.
  bool refine = true;
  std::size_t cap = kDefaultElementCap;
  // Workers over first-level branches; 0 means hardware concurrency.
  unsigned threads = 1;
};

struct AutomorphismResult {
  PermGroup group;
  SearchStats stats;
};

// Full automorphism group by individualization-refinement. Branches on the
// first smallest non-singleton cell, vertices ascending. Every leaf is
// visited (no orbit pruning); leaves whose refinement trace differs from the
// first path are cut. Throws GroupTooLargeError past options.cap elements.
AutomorphismResult automorphism_group(const Graph& g, const EngineOptions& options = {});

// Throws DomainError on degree mismatch.
bool is_automorphism(const Graph& g, const Permutation& p);

// A bijection V(g1) -> V(g2) carrying edges exactly onto edges.
std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2,
                                            const EngineOptions& options = {});

inline constexpr int kBruteForceMaxOrder = 10;

// Filters all n! permutations through is_automorphism. Refuses n > 10.
PermGroup brute_force_automorphisms(const Graph& g, std::size_t cap = kDefaultElementCap);

bool is_vertex_transitive(const Graph& g, const EngineOptions& options = {});

}  // namespace andrasfai

#endif  // ANDRASFAI_AUT_ENGINE_H_
