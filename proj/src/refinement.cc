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

#include "refinement.h"

#include <algorithm>

#include "andrasfai/errors.h"

namespace andrasfai::internal {

namespace {

// Events pack four fields exactly; vertex indices stay below 2^20.
std::uint64_t event_code(std::uint64_t tag, std::uint64_t a, std::uint64_t b,
                         std::uint64_t c = 0) {
  return (tag << 60) | (a << 40) | (b << 20) | c;
}

}  // namespace

OrderedPartition OrderedPartition::from_cells(
    int n, const std::vector<std::vector<Vertex>>& cells) {
  OrderedPartition p;
  p.lab.reserve(static_cast<std::size_t>(n));
  p.pos.assign(static_cast<std::size_t>(n), -1);
  p.cell_of.assign(static_cast<std::size_t>(n), -1);
  p.cell_size.assign(static_cast<std::size_t>(n), 0);
  for (const auto& cell : cells) {
    if (cell.empty()) continue;
    const int start = static_cast<int>(p.lab.size());
    for (Vertex v : cell) {
      if (v < 0 || v >= n || p.pos[v] != -1) {
        throw DomainError("cells do not partition the vertex set");
      }
      p.pos[v] = static_cast<int>(p.lab.size());
      p.cell_of[v] = start;
      p.lab.push_back(v);
    }
    p.cell_size[start] = static_cast<int>(cell.size());
    ++p.cells;
  }
  if (static_cast<int>(p.lab.size()) != n) {
    throw DomainError("cells do not cover the vertex set");
  }
  return p;
}

int OrderedPartition::target_cell() const {
  int best = -1;
  int best_size = 0;
  for (int i = 0; i < order(); i += cell_size[i]) {
    const int size = cell_size[i];
    if (size > 1 && (best == -1 || size < best_size)) {
      best = i;
      best_size = size;
    }
  }
  return best;
}

std::vector<std::vector<Vertex>> OrderedPartition::cell_list() const {
  std::vector<std::vector<Vertex>> out;
  for (int i = 0; i < order(); i += cell_size[i]) {
    out.emplace_back(lab.begin() + i, lab.begin() + i + cell_size[i]);
  }
  return out;
}

bool Trace::event(std::uint64_t value) {
  if (!ok_) return false;
  if (sink_ != nullptr) sink_->push_back(value);
  if (expected_ != nullptr) {
    if (index_ >= expected_->size() || (*expected_)[index_] != value) ok_ = false;
  }
  ++index_;
  return ok_;
}

Refiner::Refiner(const Graph& g) : n_(g.order()) {
  if (n_ >= (1 << 20)) throw DomainError("refinement supports fewer than 2^20 vertices");
  adj_offset_.reserve(static_cast<std::size_t>(n_) + 1);
  adj_offset_.push_back(0);
  adj_.reserve(2 * g.edge_count());
  for (Vertex v = 0; v < n_; ++v) {
    g.for_each_neighbor(v, [&](Vertex u) { adj_.push_back(u); });
    adj_offset_.push_back(static_cast<int>(adj_.size()));
  }
  count_.assign(static_cast<std::size_t>(n_), 0);
  cell_touched_.assign(static_cast<std::size_t>(n_), 0);
  in_queue_.assign(static_cast<std::size_t>(n_), 0);
}

void Refiner::enqueue(int start) {
  if (in_queue_[start]) return;
  in_queue_[start] = 1;
  queue_.push_back(start);
}

bool Refiner::refine_all(OrderedPartition& p, Trace& trace) {
  for (int i = 0; i < p.order(); i += p.cell_size[i]) enqueue(i);
  return refine(p, trace);
}

void Refiner::individualize(OrderedPartition& p, Vertex v) {
  const int start = p.cell_of[v];
  const int size = p.cell_size[start];
  if (size == 1) return;
  const int at = p.pos[v];
  const Vertex front = p.lab[start];
  p.lab[start] = v;
  p.lab[at] = front;
  p.pos[v] = start;
  p.pos[front] = at;
  p.cell_size[start] = 1;
  p.cell_size[start + 1] = size - 1;
  for (int i = start + 1; i < start + size; ++i) p.cell_of[p.lab[i]] = start + 1;
  ++p.cells;
}

bool Refiner::individualize_and_refine(OrderedPartition& p, Vertex v, Trace& trace) {
  const int start = p.cell_of[v];
  if (!trace.event(event_code(0, static_cast<std::uint64_t>(start),
                              static_cast<std::uint64_t>(p.cell_size[start])))) {
    return false;
  }
  individualize(p, v);
  enqueue(start);
  return refine(p, trace);
}

bool Refiner::refine(OrderedPartition& p, Trace& trace) {
  bool ok = true;
  while (ok && queue_head_ < queue_.size() && !p.discrete()) {
    const int s = queue_[queue_head_++];
    in_queue_[s] = 0;
    const int size = p.cell_size[s];
    if (!trace.event(event_code(1, static_cast<std::uint64_t>(s),
                                static_cast<std::uint64_t>(size)))) {
      ok = false;
      break;
    }
    for (int i = s; i < s + size; ++i) {
      const Vertex w = p.lab[i];
      for (int e = adj_offset_[w]; e < adj_offset_[w + 1]; ++e) {
        const Vertex u = adj_[e];
        const int c = p.cell_of[u];
        if (p.cell_size[c] == 1) continue;  // singletons cannot split
        if (count_[u]++ == 0) {
          touched_.push_back(u);
          if (!cell_touched_[c]) {
            cell_touched_[c] = 1;
            touched_cells_.push_back(c);
          }
        }
      }
    }
    // Cells must be visited in position order; scanning the flags beats
    // sorting once a sizeable share of the cells is touched.
    if (touched_cells_.size() * 16 > static_cast<std::size_t>(n_)) {
      for (int c = 0; c < n_; c += p.cell_size[c]) {
        if (!cell_touched_[c]) continue;
        cell_touched_[c] = 0;
        if (ok) ok = split_cell(p, c, trace);
      }
    } else {
      std::sort(touched_cells_.begin(), touched_cells_.end());
      for (int c : touched_cells_) {
        cell_touched_[c] = 0;
        if (ok) ok = split_cell(p, c, trace);
      }
    }
    touched_cells_.clear();
    for (Vertex u : touched_) count_[u] = 0;
    touched_.clear();
  }
  for (std::size_t i = queue_head_; i < queue_.size(); ++i) in_queue_[queue_[i]] = 0;
  queue_.clear();
  queue_head_ = 0;
  return ok;
}

bool Refiner::split_cell(OrderedPartition& p, int start, Trace& trace) {
  const int size = p.cell_size[start];
  if (size == 1) return true;
  if (size == 2) {
    const Vertex a = p.lab[start];
    const Vertex b = p.lab[start + 1];
    if (count_[a] == count_[b]) return true;
    const Vertex lo = count_[a] < count_[b] ? a : b;
    const Vertex hi = lo == a ? b : a;
    p.lab[start] = lo;
    p.lab[start + 1] = hi;
    p.pos[lo] = start;
    p.pos[hi] = start + 1;
    p.cell_size[start] = 1;
    p.cell_size[start + 1] = 1;
    p.cell_of[hi] = start + 1;
    ++p.cells;
    if (!trace.event(event_code(3, static_cast<std::uint64_t>(start),
                                static_cast<std::uint64_t>(count_[lo]), 1)) ||
        !trace.event(event_code(3, static_cast<std::uint64_t>(start + 1),
                                static_cast<std::uint64_t>(count_[hi]), 1))) {
      return false;
    }
    enqueue(in_queue_[start] ? start + 1 : start);
    return true;
  }
  const int first_count = count_[p.lab[start]];
  bool uniform = true;
  for (int i = start + 1; i < start + size && uniform; ++i) {
    uniform = count_[p.lab[i]] == first_count;
  }
  if (uniform) return true;

  // Untouched vertices keep their relative order at the front; only the
  // touched ones need sorting.
  scratch_.clear();
  int zeros = 0;
  for (int i = start; i < start + size; ++i) {
    const Vertex v = p.lab[i];
    if (count_[v] == 0) {
      p.lab[start + zeros++] = v;
    } else {
      scratch_.emplace_back(count_[v], v);
    }
  }
  std::sort(scratch_.begin(), scratch_.end());
  for (int i = 0; i < size; ++i) {
    if (i >= zeros) p.lab[start + i] = scratch_[i - zeros].second;
    p.pos[p.lab[start + i]] = start + i;
  }

  const bool parent_queued = in_queue_[start] != 0;
  int largest = start;
  int largest_size = 0;
  int fragments = 0;
  int i = 0;
  while (i < size) {
    const int c = count_[p.lab[start + i]];
    int j = i;
    while (j < size && count_[p.lab[start + j]] == c) ++j;
    const int frag_start = start + i;
    const int frag_size = j - i;
    p.cell_size[frag_start] = frag_size;
    for (int x = i; x < j; ++x) p.cell_of[p.lab[start + x]] = frag_start;
    if (!trace.event(event_code(3, static_cast<std::uint64_t>(frag_start),
                                static_cast<std::uint64_t>(c),
                                static_cast<std::uint64_t>(frag_size)))) {
      return false;
    }
    if (frag_size > largest_size) {
      largest = frag_start;
      largest_size = frag_size;
    }
    ++fragments;
    i = j;
  }
  p.cells += fragments - 1;

  // A stable parent only needs all but its largest fragment re-examined.
  for (int f = start; f < start + size; f += p.cell_size[f]) {
    if (parent_queued ? f != start : f != largest) enqueue(f);
  }
  return true;
}

}  // namespace andrasfai::internal
