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

#ifndef ANDRASFAI_SRC_REFINEMENT_H_
#define ANDRASFAI_SRC_REFINEMENT_H_

#include <cstdint>
#include <vector>

#include "andrasfai/graph.h"

namespace andrasfai::internal {

// Ordered partition in the usual lab/ptn style: cells are contiguous ranges
// of `lab`, identified by their start index. Cell order depends only on the
// graph structure and the initial cell order, never on vertex labels, so two
// isomorphic inputs refine to corresponding partitions.
struct OrderedPartition {
  std::vector<Vertex> lab;
  std::vector<int> pos;         // vertex -> index in lab
  std::vector<int> cell_of;     // vertex -> start of its cell
  std::vector<int> cell_size;   // start -> size (only meaningful at starts)
  int cells = 0;

  // Initial partition with cells listed in the given order.
  static OrderedPartition from_cells(int n, const std::vector<std::vector<Vertex>>& cells);

  int order() const { return static_cast<int>(lab.size()); }
  bool discrete() const { return cells == order(); }

  // Start of the first smallest non-singleton cell, or -1 if discrete.
  int target_cell() const;

  // Vertex sets of the cells, in cell order.
  std::vector<std::vector<Vertex>> cell_list() const;
};

// Records or checks the stream of refinement events. With `expected` set,
// any deviation marks the trace as failed and refinement stops early.
class Trace {
 public:
  static Trace recording(std::vector<std::uint64_t>* sink) { return Trace(sink, nullptr); }
  static Trace checking(const std::vector<std::uint64_t>* expected) {
    return Trace(nullptr, expected);
  }

  bool event(std::uint64_t value);
  bool ok() const { return ok_; }
  // True if every expected event was matched.
  bool complete() const {
    return ok_ && (expected_ == nullptr || index_ == expected_->size());
  }

 private:
  Trace(std::vector<std::uint64_t>* sink, const std::vector<std::uint64_t>* expected)
      : sink_(sink), expected_(expected) {}

  std::vector<std::uint64_t>* sink_;
  const std::vector<std::uint64_t>* expected_;
  std::size_t index_ = 0;
  bool ok_ = true;
};

// Counting refinement to the coarsest equitable partition. Holds adjacency
// lists and scratch space; one instance per worker.
class Refiner {
 public:
  explicit Refiner(const Graph& g);

  // Refines using every cell as an initial splitter.
  bool refine_all(OrderedPartition& p, Trace& trace);

  // Splits v off the front of its cell and refines from {v}.
  bool individualize_and_refine(OrderedPartition& p, Vertex v, Trace& trace);

  // Splits v off without refining.
  static void individualize(OrderedPartition& p, Vertex v);

 private:
  bool refine(OrderedPartition& p, Trace& trace);
  bool split_cell(OrderedPartition& p, int start, Trace& trace);
  void enqueue(int start);

  int n_;
  std::vector<int> adj_offset_;
  std::vector<Vertex> adj_;

  std::vector<int> count_;
  std::vector<Vertex> touched_;
  std::vector<int> touched_cells_;
  std::vector<char> cell_touched_;
  std::vector<char> in_queue_;
  std::vector<int> queue_;
  std::size_t queue_head_ = 0;
  std::vector<std::pair<int, Vertex>> scratch_;
};

}  // namespace andrasfai::internal

#endif  // ANDRASFAI_SRC_REFINEMENT_H_
