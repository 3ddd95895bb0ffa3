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

#include "andrasfai/aut_engine.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

#include "andrasfai/errors.h"
#include "refinement.h"

namespace andrasfai {

using internal::OrderedPartition;
using internal::Refiner;
using internal::Trace;

Coloring Coloring::from_colors(const std::vector<int>& colors) {
  if (colors.empty()) throw DomainError("coloring of zero vertices");
  Coloring c;
  std::unordered_map<int, int> renumber;
  c.color_.reserve(colors.size());
  for (std::size_t v = 0; v < colors.size(); ++v) {
    auto [it, inserted] = renumber.try_emplace(colors[v], static_cast<int>(renumber.size()));
    if (inserted) c.classes_.emplace_back();
    c.color_.push_back(it->second);
    c.classes_[it->second].push_back(static_cast<Vertex>(v));
  }
  return c;
}

Coloring Coloring::uniform(int n) {
  return from_colors(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Coloring Coloring::individualized(int n, const std::vector<Vertex>& singled_out) {
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  int next = 1;
  for (Vertex v : singled_out) {
    if (v < 0 || v >= n) throw DomainError("individualized vertex out of range");
    colors[v] = next++;
  }
  return from_colors(colors);
}

Coloring Coloring::permuted(const Permutation& p) const {
  if (p.degree() != order()) throw DomainError("permuted: degree mismatch");
  std::vector<int> colors(color_.size());
  for (Vertex v = 0; v < order(); ++v) colors[p(v)] = color_[v];
  return from_colors(colors);
}

bool is_equitable(const Graph& g, const Coloring& c) {
  if (c.order() != g.order()) throw DomainError("coloring size does not match graph");
  const std::size_t k = c.classes().size();
  std::vector<int> reference(k), counts(k);
  for (const auto& cls : c.classes()) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      std::fill(counts.begin(), counts.end(), 0);
      g.for_each_neighbor(cls[i], [&](Vertex u) { ++counts[c.color(u)]; });
      if (i == 0) {
        reference = counts;
      } else if (counts != reference) {
        return false;
      }
    }
  }
  return true;
}

Coloring equitable_refinement(const Graph& g, const Coloring& initial) {
  if (initial.order() != g.order()) {
    throw DomainError("coloring size does not match graph");
  }
  OrderedPartition p = OrderedPartition::from_cells(g.order(), initial.classes());
  Refiner refiner(g);
  Trace trace = Trace::recording(nullptr);
  refiner.refine_all(p, trace);
  std::vector<int> colors(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) colors[v] = p.cell_of[v];
  return Coloring::from_colors(colors);
}

nlohmann::ordered_json to_json(const SearchStats& stats) {
  return {{"nodes_visited", stats.nodes_visited},
          {"automorphisms_found", stats.automorphisms_found},
          {"max_depth", stats.max_depth}};
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) {
    throw DomainError("is_automorphism: permutation degree " +
                      std::to_string(p.degree()) + " vs graph order " +
                      std::to_string(g.order()));
  }
  // p is a bijection, so mapping E into E forces E onto E.
  for (const auto& [u, v] : g.edges()) {
    if (!g.has_edge(p(u), p(v))) return false;
  }
  return true;
}

namespace {

// The leftmost root-to-leaf path of the reference graph's search tree.
struct FirstPath {
  std::vector<std::vector<std::uint64_t>> traces;  // traces[d]: events into depth d
  std::vector<Vertex> leaf;                        // lab of the discrete leaf
};

// Adjacency of `v` to the previously individualized vertices; stands in for
// the refinement trace when refinement is off.
std::uint64_t consistency_code(const Graph& g, const std::vector<Vertex>& chosen, Vertex v) {
  std::uint64_t h = 0x243f6a8885a308d3ull ^ chosen.size();
  for (Vertex u : chosen) {
    h = (h * 0x100000001b3ull) ^ (g.has_edge(u, v) ? 0x9e37u : 0x7f4au);
  }
  return h;
}

bool refine_root(const Graph& g, Refiner& refiner, const EngineOptions& options,
                 OrderedPartition& p, Trace& trace) {
  p = OrderedPartition::from_cells(g.order(), Coloring::uniform(g.order()).classes());
  if (!options.refine) return true;
  return refiner.refine_all(p, trace) && trace.complete();
}

FirstPath build_first_path(const Graph& ref, const EngineOptions& options) {
  FirstPath path;
  Refiner refiner(ref);
  OrderedPartition p;
  path.traces.emplace_back();
  Trace root = Trace::recording(&path.traces.back());
  refine_root(ref, refiner, options, p, root);
  std::vector<Vertex> chosen;
  while (!p.discrete()) {
    const int c = p.target_cell();
    const Vertex v = *std::min_element(p.lab.begin() + c, p.lab.begin() + c + p.cell_size[c]);
    path.traces.emplace_back();
    Trace trace = Trace::recording(&path.traces.back());
    if (options.refine) {
      refiner.individualize_and_refine(p, v, trace);
    } else {
      trace.event(consistency_code(ref, chosen, v));
      Refiner::individualize(p, v);
    }
    chosen.push_back(v);
  }
  path.leaf = p.lab;
  return path;
}

// Explores the target graph's search tree against a fixed first path.
class Explorer {
 public:
  Explorer(const Graph& ref, const Graph& target, const FirstPath& path,
           const EngineOptions& options, bool stop_at_first,
           std::atomic<std::size_t>& found_total, std::atomic<bool>& done)
      : ref_(ref),
        target_(target),
        path_(path),
        options_(options),
        stop_at_first_(stop_at_first),
        found_total_(found_total),
        done_(done),
        refiner_(target),
        ref_edges_(ref.edges()) {}

  // Explores the children of `root` whose index in ascending vertex order
  // is congruent to `slice` modulo `stride`.
  void explore_root(const OrderedPartition& root, unsigned slice, unsigned stride) {
    ++stats_.nodes_visited;
    if (root.discrete()) {
      if (slice == 0) leaf(root);
      return;
    }
    children(root, 0, slice, stride);
  }

  std::vector<Permutation>& found() { return found_; }
  const SearchStats& stats() const { return stats_; }

 private:
  void explore(OrderedPartition& p, std::size_t depth) {
    ++stats_.nodes_visited;
    stats_.max_depth = std::max<std::uint64_t>(stats_.max_depth, depth);
    if (p.discrete()) {
      leaf(p);
      return;
    }
    children(p, depth, 0, 1);
  }

  void children(const OrderedPartition& p, std::size_t depth, unsigned slice,
                unsigned stride) {
    const int c = p.target_cell();
    std::vector<Vertex> candidates(p.lab.begin() + c, p.lab.begin() + c + p.cell_size[c]);
    std::sort(candidates.begin(), candidates.end());
    const std::size_t next = depth + 1;
    if (next >= path_.traces.size()) return;
    for (std::size_t i = slice; i < candidates.size(); i += stride) {
      if (done_.load(std::memory_order_relaxed)) return;
      const Vertex v = candidates[i];
      OrderedPartition child = p;
      Trace trace = Trace::checking(&path_.traces[next]);
      bool ok;
      if (options_.refine) {
        ok = refiner_.individualize_and_refine(child, v, trace) && trace.complete();
      } else {
        ok = trace.event(consistency_code(target_, chosen_, v)) && trace.complete();
        if (ok) Refiner::individualize(child, v);
      }
      if (!ok) {
        ++stats_.nodes_visited;
        continue;
      }
      chosen_.push_back(v);
      explore(child, next);
      chosen_.pop_back();
    }
  }

  void leaf(const OrderedPartition& p) {
    std::vector<Vertex> images(p.lab.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[path_.leaf[i]] = p.lab[i];
    for (const auto& [u, v] : ref_edges_) {
      if (!target_.has_edge(images[u], images[v])) return;
    }
    found_.emplace_back(std::move(images));
    if (found_total_.fetch_add(1) + 1 > options_.cap) throw GroupTooLargeError(options_.cap);
    if (stop_at_first_) done_.store(true);
  }

  const Graph& ref_;
  const Graph& target_;
  const FirstPath& path_;
  const EngineOptions& options_;
  const bool stop_at_first_;
  std::atomic<std::size_t>& found_total_;
  std::atomic<bool>& done_;
  Refiner refiner_;
  std::vector<Edge> ref_edges_;
  std::vector<Vertex> chosen_;
  std::vector<Permutation> found_;
  SearchStats stats_;
};

struct SearchOutcome {
  std::vector<Permutation> found;
  SearchStats stats;
};

SearchOutcome run_search(const Graph& ref, const Graph& target,
                         const EngineOptions& options, bool stop_at_first) {
  const FirstPath path = build_first_path(ref, options);
  SearchOutcome out;

  Refiner root_refiner(target);
  OrderedPartition root;
  Trace root_trace = Trace::checking(&path.traces[0]);
  if (!refine_root(target, root_refiner, options, root, root_trace)) {
    out.stats.nodes_visited = 1;
    return out;
  }

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::max(1u, threads);
  std::atomic<std::size_t> found_total{0};
  std::atomic<bool> done{false};

  std::vector<Explorer> explorers;
  explorers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    explorers.emplace_back(ref, target, path, options, stop_at_first, found_total, done);
  }
  if (threads == 1) {
    explorers[0].explore_root(root, 0, 1);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          explorers[w].explore_root(root, w, threads);
        } catch (...) {
          errors[w] = std::current_exception();
          done.store(true);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (unsigned w = 0; w < threads; ++w) {
    auto& f = explorers[w].found();
    std::move(f.begin(), f.end(), std::back_inserter(out.found));
    const SearchStats& s = explorers[w].stats();
    // The root is counted once per worker.
    out.stats.nodes_visited += s.nodes_visited - (w > 0 ? 1 : 0);
    out.stats.max_depth = std::max(out.stats.max_depth, s.max_depth);
  }
  std::sort(out.found.begin(), out.found.end());
  return out;
}

}  // namespace

AutomorphismResult automorphism_group(const Graph& g, const EngineOptions& options) {
  SearchOutcome outcome = run_search(g, g, options, /*stop_at_first=*/false);
  const std::size_t cap = std::max(options.cap, outcome.found.size());
  PermGroup group = PermGroup::from_elements(g.order(), std::move(outcome.found), cap);
  outcome.stats.automorphisms_found = group.order();
  return AutomorphismResult{std::move(group), outcome.stats};
}

std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2,
                                            const EngineOptions& options) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }
  auto degrees = [](const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g1) != degrees(g2)) return std::nullopt;
  SearchOutcome outcome = run_search(g1, g2, options, /*stop_at_first=*/true);
  if (outcome.found.empty()) return std::nullopt;
  return outcome.found.front();
}

PermGroup brute_force_automorphisms(const Graph& g, std::size_t cap) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw DomainError("brute force refuses n = " + std::to_string(n) + " > " +
                      std::to_string(kBruteForceMaxOrder));
  }
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> found;
  do {
    Permutation p(images);
    if (is_automorphism(g, p)) {
      if (found.size() >= cap) throw GroupTooLargeError(cap);
      found.push_back(std::move(p));
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return PermGroup::from_elements(n, std::move(found), cap);
}

bool is_vertex_transitive(const Graph& g, const EngineOptions& options) {
  const AutomorphismResult aut = automorphism_group(g, options);
  return static_cast<int>(orbit(aut.group, 0).size()) == g.order();
}

}  // namespace andrasfai
