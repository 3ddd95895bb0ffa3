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

#include "andrasfai/graph.h"

#include <algorithm>
#include <deque>
#include <string>

#include "andrasfai/errors.h"

namespace andrasfai {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for n=" +
                      std::to_string(g.order()));
  }
}

void check_k(int k) {
  if (k < 1) {
    throw DomainError("Andrasfai parameter k must be >= 1, got " +
                      std::to_string(k));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n), words_(0) {
  if (n < 1) throw DomainError("graph needs at least one vertex");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(words_ * static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) {
      throw DomainError("loop at vertex " + std::to_string(u));
    }
    g.set_edge(u, v, true);
  }
  return g;
}

void Graph::set_edge(Vertex u, Vertex v, bool present) {
  const bool had = has_edge(u, v);
  if (had == present) return;
  auto flip = [&](Vertex a, Vertex b) {
    bits_[static_cast<std::size_t>(a) * words_ + (static_cast<std::size_t>(b) >> 6)] ^=
        std::uint64_t{1} << (b & 63);
  };
  flip(u, v);
  flip(v, u);
  if (present) {
    ++edge_count_;
  } else {
    --edge_count_;
  }
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for_each_neighbor(v, [&](Vertex u) { out.push_back(u); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for_each_neighbor(u, [&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (!has_edge(u, v)) {
    throw DomainError("no edge {" + std::to_string(u) + "," +
                      std::to_string(v) + "} to remove");
  }
  Graph g = *this;
  g.set_edge(u, v, false);
  return g;
}

ConnectionSet::ConnectionSet(int n, std::vector<int> residues) : n_(n) {
  if (n < 2) {
    throw DomainError("connection set modulus must be >= 2, got " +
                      std::to_string(n));
  }
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  for (int c : residues) {
    if (c == 0) {
      throw ConnectionSetError("connection set contains the identity 0", c);
    }
    if (c < 0 || c >= n) {
      throw ConnectionSetError("residue " + std::to_string(c) +
                                   " outside 1.." + std::to_string(n - 1),
                               c);
    }
  }
  elements_ = std::move(residues);
  for (int c : elements_) {
    if (!contains(n - c)) {
      throw ConnectionSetError(
          "connection set is not symmetric: " + std::to_string(c) +
              " present but its inverse " + std::to_string(n - c) + " is not",
          c);
    }
  }
}

ConnectionSet ConnectionSet::symmetrized(int n, std::vector<int> residues) {
  const std::size_t original = residues.size();
  for (std::size_t i = 0; i < original; ++i) {
    const int c = residues[i];
    if (c > 0 && c < n) residues.push_back(n - c);
  }
  return ConnectionSet(n, std::move(residues));
}

bool ConnectionSet::contains(int residue) const {
  return std::binary_search(elements_.begin(), elements_.end(), residue);
}

Graph cayley_graph(const ConnectionSet& connection) {
  const int n = connection.modulus();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (int c : connection.elements()) {
      const Vertex v = (u + c) % n;
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

ConnectionSet andrasfai_connection_set(int k) {
  check_k(k);
  const int n = 3 * k - 1;
  std::vector<int> c;
  for (int t = 0; t < k; ++t) c.push_back(3 * t + 1);
  return ConnectionSet(n, std::move(c));
}

Graph andrasfai(int k) { return cayley_graph(andrasfai_connection_set(k)); }

TriPartition tri_partition(int k) {
  check_k(k);
  TriPartition p;
  for (int t = 0; t < k; ++t) {
    p.v0.push_back(3 * t);
    p.v1.push_back(3 * t + 1);
  }
  for (int t = 0; t + 2 <= k; ++t) p.v2.push_back(3 * t + 2);
  return p;
}

std::vector<Vertex> neighbors_formula_v0(int k, int j) {
  check_k(k);
  if (j < 1 || j > k - 1) {
    throw DomainError("vertex 3j in V0 needs 1 <= j <= k-1, got j=" +
                      std::to_string(j) + ", k=" + std::to_string(k));
  }
  std::vector<Vertex> out;
  for (int i = j; i <= k - 1; ++i) out.push_back(3 * i + 1);
  for (int l = 0; l <= j - 1; ++l) out.push_back(3 * l + 2);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> neighbors_formula_v2(int k, int j) {
  check_k(k);
  if (j < 0 || j > k - 2) {
    throw DomainError("vertex 3j+2 in V2 needs 0 <= j <= k-2, got j=" +
                      std::to_string(j) + ", k=" + std::to_string(k));
  }
  std::vector<Vertex> out;
  for (int i = 0; i <= j; ++i) out.push_back(3 * i + 1);
  for (int l = j + 1; l <= k - 1; ++l) out.push_back(3 * l);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Vertex> InducedSubgraph::index_of(Vertex original_vertex) const {
  auto it = std::lower_bound(original.begin(), original.end(), original_vertex);
  if (it == original.end() || *it != original_vertex) return std::nullopt;
  return static_cast<Vertex>(it - original.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw DomainError("induced subgraph of an empty set");
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted) check_vertex(g, v);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("induced subgraph vertex set has duplicates");
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      if (g.has_edge(sorted[a], sorted[b])) {
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
    }
  }
  const int m = static_cast<int>(sorted.size());
  return InducedSubgraph{Graph::from_edges(m, edges), std::move(sorted)};
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      bool clash = false;
      g.for_each_neighbor(u, [&](Vertex w) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < n; ++v) {
    (side[v] == 0 ? parts.part_u : parts.part_w).push_back(v);
  }
  return parts;
}

namespace {

// Eccentricity of `root` by frontier expansion over adjacency rows; -1 if
// some vertex is unreachable.
int eccentricity(const Graph& g, Vertex root) {
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words);
  visited[root >> 6] |= std::uint64_t{1} << (root & 63);
  frontier = visited;
  int reached = 1;
  int ecc = 0;
  for (;;) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits != 0) {
        const Vertex u = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        const auto row = g.row(u);
        for (std::size_t x = 0; x < words; ++x) next[x] |= row[x];
      }
    }
    int added = 0;
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      added += std::popcount(next[w]);
    }
    if (added == 0) break;
    reached += added;
    ++ecc;
    frontier.swap(next);
  }
  return reached == g.order() ? ecc : -1;
}

}  // namespace

bool is_connected(const Graph& g) { return eccentricity(g, 0) >= 0; }

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int ecc = eccentricity(g, v);
    if (ecc < 0) throw DomainError("diameter of a disconnected graph");
    best = std::max(best, ecc);
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  constexpr int kNone = -1;
  int best = kNone;
  std::vector<int> dist(n), parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kNone);
    queue.clear();
    dist[root] = 0;
    parent[root] = kNone;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      // Any cycle closed from depth d has length >= 2d+1.
      if (best != kNone && 2 * dist[u] + 1 >= best) break;
      g.for_each_neighbor(u, [&](Vertex w) {
        if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          const int len = dist[u] + dist[w] + 1;
          if (best == kNone || len < best) best = len;
        }
      });
    }
  }
  if (best == kNone) return std::nullopt;
  return best;
}

std::optional<int> regular_degree(const Graph& g) {
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

bool is_triangle_free(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    const auto ru = g.row(u);
    const auto rv = g.row(v);
    for (std::size_t w = 0; w < g.words_per_row(); ++w) {
      if ((ru[w] & rv[w]) != 0) return false;
    }
  }
  return true;
}

}  // namespace andrasfai
