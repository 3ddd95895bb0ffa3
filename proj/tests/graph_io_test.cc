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

#include <random>
#include <string>
#include <vector>

#include "andrasfai/errors.h"
#include "andrasfai/graph.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace andrasfai {
namespace {

// Plain reference encoder: collect the bit string, pad, cut into sixes.
std::string reference_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  std::string bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
  }
  while (bits.size() % 6 != 0) bits.push_back('0');
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    out.push_back(static_cast<char>(std::stoi(bits.substr(i, 6), nullptr, 2) + 63));
  }
  return out + "\n";
}

TEST(Graph6Test, Examples) {
  Graph k2 = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  EXPECT_EQ(to_graph6(k2), "A_\n");
  EXPECT_EQ(from_graph6("A_"), k2);
  EXPECT_EQ(from_graph6("A_\n"), k2);
  EXPECT_EQ(from_graph6(">>graph6<<A_\n"), k2);
  Graph a5 = andrasfai(5);
  EXPECT_EQ(from_graph6(to_graph6(a5)), a5);
  EXPECT_EQ(to_graph6(testing_util::cycle_graph(5)), "Dhc\n");
}

TEST(Graph6Test, MatchesReferenceAndRoundTrips) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const double p = (rng() % 100) / 100.0;
    Graph g = testing_util::random_graph(n, p, rng);
    const std::string text = to_graph6(g);
    ASSERT_EQ(text, reference_graph6(g)) << n;
    ASSERT_EQ(from_graph6(text), g) << text;
  }
}

TEST(Graph6Test, LongSizeForm) {
  Graph g = andrasfai(30);  // 89 vertices
  const std::string text = to_graph6(g);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(text, reference_graph6(g));
  EXPECT_EQ(from_graph6(text), g);
}

TEST(Graph6Test, ParseErrorsCarryOffsets) {
  try {
    from_graph6("Dh");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  try {
    from_graph6("A ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  try {
    from_graph6("A_x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("?"), ParseError);
  EXPECT_THROW(from_graph6("~"), ParseError);
}

TEST(TextFormatsTest, DotAndEdgeList) {
  Graph k2 = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  EXPECT_EQ(to_edge_list(k2), "0 1\n");
  EXPECT_EQ(to_dot(k2), "graph {\n  0;\n  1;\n  0 -- 1;\n}\n");
  EXPECT_EQ(to_edge_list(Graph(3)), "");
  EXPECT_EQ(to_edge_list(andrasfai(2)), "0 1\n0 4\n1 2\n2 3\n3 4\n");
}

}  // namespace
}  // namespace andrasfai
