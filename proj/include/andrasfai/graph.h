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

#ifndef ANDRASFAI_GRAPH_H_
#define ANDRASFAI_GRAPH_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace andrasfai {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 0..n-1. Adjacency is a dense symmetric
// bit matrix, so has_edge() is O(1) and neighbor iteration is a bit scan over
// one row. Immutable once built.
class Graph {
 public:
  // Edgeless graph on n >= 1 vertices.
  explicit Graph(int n);

  // Builds from an edge list. Duplicate edges are merged; loops and
  // out-of-range endpoints throw DomainError.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const {
    return (row_ptr(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  int degree(Vertex v) const;

  // Raw adjacency row of v: bit u of the row is set iff {v,u} is an edge.
  std::span<const std::uint64_t> row(Vertex v) const {
    return {row_ptr(v), words_};
  }
  std::size_t words_per_row() const { return words_; }

  template <typename Fn>
  void for_each_neighbor(Vertex v, Fn&& fn) const {
    const std::uint64_t* r = row_ptr(v);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<Vertex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> neighbors(Vertex v) const;

  // All edges {u,v} with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Same vertex set with one edge removed. Throws DomainError if absent.
  Graph without_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const = default;

 private:
  const std::uint64_t* row_ptr(Vertex v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  void set_edge(Vertex u, Vertex v, bool present);

  int n_;
  std::size_t words_;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Symmetric identity-free subset of Z_n used as a Cayley connection set.
class ConnectionSet {
 public:
  // Throws ConnectionSetError if a residue is 0, outside 1..n-1, or if its
  // inverse n - c is missing.
  ConnectionSet(int n, std::vector<int> residues);

  // Adds n - c for every given c before validating.
  static ConnectionSet symmetrized(int n, std::vector<int> residues);

  int modulus() const { return n_; }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int residue) const;

 private:
  int n_;
  std::vector<int> elements_;  // sorted, unique
};

// Residue classes of 0..3k-2 modulo 3.
struct TriPartition {
  std::vector<Vertex> v0;  // 3t,   0 <= t <= k-1
  std::vector<Vertex> v1;  // 3t+1, 0 <= t <= k-1
  std::vector<Vertex> v2;  // 3t+2, 0 <= t <= k-2
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new index -> original vertex, ascending

  std::optional<Vertex> index_of(Vertex original_vertex) const;
};

struct Bipartition {
  std::vector<Vertex> part_u;
  std::vector<Vertex> part_w;
};

// {u,v} is an edge iff (v - u) mod n is in the connection set.
Graph cayley_graph(const ConnectionSet& connection);

// {3t+1 | 0 <= t <= k-1} in Z_{3k-1}.
ConnectionSet andrasfai_connection_set(int k);

// Andrasfai graph on 3k-1 vertices, k-regular. Throws DomainError for k < 1.
Graph andrasfai(int k);

TriPartition tri_partition(int k);

// Closed-form neighborhood of v = 3j in And(k), 1 <= j <= k-1:
// {3i+1 | j <= i <= k-1} u {3l+2 | 0 <= l <= j-1}. Sorted ascending.
std::vector<Vertex> neighbors_formula_v0(int k, int j);

// Closed-form neighborhood of w = 3j+2 in And(k), 0 <= j <= k-2:
// {3i+1 | 0 <= i <= j} u {3l | j+1 <= l <= k-1}. Sorted ascending.
std::vector<Vertex> neighbors_formula_v2(int k, int j);

// Subgraph induced on `vertices` (any order, no duplicates), relabeled to
// 0..|s|-1 in ascending order of the original labels.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// BFS 2-coloring. Each component's smallest vertex goes to part_u.
std::optional<Bipartition> is_bipartite(const Graph& g);

bool is_connected(const Graph& g);

// Throws DomainError on a disconnected graph.
int diameter(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

inline int degree(const Graph& g, Vertex v) { return g.degree(v); }

// Common degree if g is regular.
std::optional<int> regular_degree(const Graph& g);

bool is_triangle_free(const Graph& g);

}  // namespace andrasfai

#endif  // ANDRASFAI_GRAPH_H_
