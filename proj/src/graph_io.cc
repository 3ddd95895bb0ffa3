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

#include "andrasfai/graph_io.h"

#include <cstdint>
#include <vector>

#include "andrasfai/errors.h"

namespace andrasfai {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
  auto put_bits = [&](int chunks) {
    for (int c = chunks - 1; c >= 0; --c) {
      out.push_back(static_cast<char>(((n >> (6 * c)) & 0x3f) + kBias));
    }
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    put_bits(3);
  } else {
    out.append("~~");
    put_bits(6);
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  out.push_back('\n');
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  std::size_t end = text.size();
  if (end > pos && text[end - 1] == '\n') --end;

  auto chunk = [&](std::size_t at) -> std::uint64_t {
    if (at >= end) throw ParseError("graph6 text truncated", at);
    const unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) {
      throw ParseError("invalid graph6 character", at);
    }
    return c - 63;
  };

  std::uint64_t n = 0;
  if (chunk(pos) < 63) {
    n = chunk(pos);
    pos += 1;
  } else if (pos + 1 < end && chunk(pos + 1) == 63) {
    for (int i = 0; i < 6; ++i) n = (n << 6) | chunk(pos + 2 + i);
    pos += 8;
  } else {
    for (int i = 0; i < 3; ++i) n = (n << 6) | chunk(pos + 1 + i);
    pos += 4;
  }
  if (n == 0) throw ParseError("graph6 graph with zero vertices", pos - 1);
  if (n > (1u << 20)) throw ParseError("graph6 graph too large", pos - 1);

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::size_t chunks = static_cast<std::size_t>((bits + 5) / 6);
  if (end - pos < chunks) {
    throw ParseError("graph6 text truncated", end);
  }
  if (end - pos > chunks) {
    throw ParseError("trailing data after graph6 record", pos + chunks);
  }

  std::vector<Edge> edges;
  std::uint64_t index = 0;
  for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
    for (Vertex u = 0; u < v; ++u, ++index) {
      const std::uint64_t c = chunk(pos + index / 6);
      if ((c >> (5 - index % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_dot(const Graph& g) {
  std::string out = "graph {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v) + ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace andrasfai
