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

#ifndef ANDRASFAI_GRAPH_IO_H_
#define ANDRASFAI_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "andrasfai/graph.h"

namespace andrasfai {

// graph6 encoding without the optional ">>graph6<<" header, newline
// terminated.
std::string to_graph6(const Graph& g);

// Parses one graph6 record. Accepts an optional ">>graph6<<" header and a
// single trailing newline. Throws ParseError with the offending byte offset.
Graph from_graph6(std::string_view text);

// `graph {` ... `}` with one line per vertex, then one `u -- v;` per edge.
std::string to_dot(const Graph& g);

// One "u v" line per edge, u < v, lexicographic.
std::string to_edge_list(const Graph& g);

}  // namespace andrasfai

#endif  // ANDRASFAI_GRAPH_IO_H_
