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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "andrasfai/aut_engine.h"
#include "andrasfai/certificate.h"
#include "andrasfai/errors.h"
#include "andrasfai/graph.h"
#include "andrasfai/perm_group.h"
#include "andrasfai/permutation.h"

namespace andrasfai {
namespace {

constexpr int kMaxK = 200;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Graph from_edge_vector(int n, const std::vector<Edge>& e) { return Graph::from_edges(n, e); }

bool is_isomorphism(const Graph& a, const Graph& b, const Permutation& f) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  for (auto [u, v] : a.edges()) {
    if (!b.has_edge(f(u), f(v))) return false;
  }
  return true;
}

Outcome theorem_sweep() {
  Outcome o;
  EngineOptions opts;
  opts.threads = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int k = 2; k <= kMaxK; ++k) {
    const int n = 3 * k - 1;
    const PermGroup aut = automorphism_group(andrasfai(k), opts).group;
    if (aut.order() != static_cast<std::size_t>(2 * n)) {
      o.fail("k=" + std::to_string(k) + ": order " + std::to_string(aut.order()));
    } else if (!(aut == affine_group(n))) {
      o.fail("k=" + std::to_string(k) + ": not the affine group");
    } else {
      auto w = is_dihedral(aut);
      std::vector<Permutation> gens;
      if (w) gens = {w->rotation, w->reflection};
      if (!w || order_of(w->rotation) != static_cast<std::uint64_t>(n) ||
          order_of(w->reflection) != 2 ||
          compose(w->reflection, compose(w->rotation, w->reflection)) != inverse(w->rotation) ||
          !(generate(n, gens) == aut)) {
        o.fail("k=" + std::to_string(k) + ": no valid dihedral witness");
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60.0) o.fail("sweep took " + std::to_string(secs) + " s");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::pair<int, std::size_t> cases[] = {{2, 10}, {3, 16}};
  for (auto [k, expected] : cases) {
    const Graph g = andrasfai(k);
    const PermGroup brute = brute_force_automorphisms(g);
    const PermGroup engine = automorphism_group(g).group;
    if (!(brute == engine)) o.fail("k=" + std::to_string(k) + ": engine and brute force differ");
    if (brute.order() != expected) o.fail("k=" + std::to_string(k) + ": wrong order");
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10.0) o.fail("took " + std::to_string(secs) + " s");
  return o;
}

Outcome named_isomorphisms() {
  Outcome o;
  std::vector<Edge> cycle, ladder;
  for (int i = 0; i < 5; ++i) cycle.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 8; ++i) ladder.emplace_back(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) ladder.emplace_back(i, i + 4);
  const Graph c5 = from_edge_vector(5, cycle);
  const Graph mobius = from_edge_vector(8, ladder);
  auto f = find_isomorphism(andrasfai(2), c5);
  if (!f || !is_isomorphism(andrasfai(2), c5, *f)) o.fail("And(2) vs C5");
  auto h = find_isomorphism(andrasfai(3), mobius);
  if (!h || !is_isomorphism(andrasfai(3), mobius, *h)) o.fail("And(3) vs Moebius ladder");
  return o;
}

Outcome structural_metrics() {
  Outcome o;
  for (int k = 2; k <= kMaxK; ++k) {
    const Graph g = andrasfai(k);
    if (diameter(g) != 2) o.fail("diameter at k=" + std::to_string(k));
    const auto gi = girth(g);
    if (k >= 3 && gi != 4) o.fail("girth at k=" + std::to_string(k));
    if (k == 2 && gi != 5) o.fail("girth(And(2)) is not 5");
  }
  if (o.pass) o.detail = "girth(And(2)) = 5, outside the girth-4 range";
  return o;
}

Outcome neighbor_formulas() {
  Outcome o;
  for (int k = 2; k <= kMaxK; ++k) {
    const Graph g = andrasfai(k);
    for (int j = 1; j <= k - 1; ++j) {
      if (neighbors_formula_v0(k, j) != g.neighbors(3 * j)) o.fail("v0 formula at k=" + std::to_string(k));
    }
    for (int j = 0; j <= k - 2; ++j) {
      if (neighbors_formula_v2(k, j) != g.neighbors(3 * j + 2)) o.fail("v2 formula at k=" + std::to_string(k));
    }
  }
  return o;
}

Outcome certificate_soundness() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  CertificateOptions opts;
  opts.engine.threads = 0;
  for (int k = 2; k <= kMaxK; ++k) {
    if (!verify_theorem(k, opts).overall) o.fail("certificate fails at k=" + std::to_string(k));
  }
  int mutants = 0;
  for (int k = 3; k <= 8; ++k) {
    const Graph g = andrasfai(k);
    for (auto [u, v] : g.edges()) {
      const Graph h = g.without_edge(u, v);
      const AutomorphismResult aut = automorphism_group(h, opts.engine);
      ++mutants;
      if (certify_graph(h, k, aut.group, aut.stats).overall) {
        o.fail("deleting " + std::to_string(u) + "-" + std::to_string(v) + " at k=" +
               std::to_string(k) + " went unnoticed");
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 300.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(mutants) + " single-edge deletions all caught";
  return o;
}

// Random connected bipartite graphs plus every H(k), k <= 8.
std::vector<Graph> bipartite_corpus() {
  std::vector<Graph> out;
  for (int k = 2; k <= 8; ++k) out.push_back(build_h(k).graph);
  std::mt19937 rng(3301);
  while (out.size() < 150) {
    const int a = 1 + static_cast<int>(rng() % 8);
    const int b = 1 + static_cast<int>(rng() % 8);
    std::bernoulli_distribution coin(0.3 + 0.1 * (rng() % 5));
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) {
        if (coin(rng)) e.emplace_back(i, a + j);
      }
    }
    Graph g = Graph::from_edges(a + b, e);
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

Outcome bipartite_sides() {
  Outcome o;
  std::size_t graphs = 0, maps = 0;
  for (const Graph& g : bipartite_corpus()) {
    auto parts = is_bipartite(g);
    if (!parts) {
      o.fail("corpus graph is not bipartite");
      continue;
    }
    PermGroup aut = automorphism_group(g).group;
    ++graphs;
    const std::set<Vertex> u(parts->part_u.begin(), parts->part_u.end());
    const std::set<Vertex> w(parts->part_w.begin(), parts->part_w.end());
    for (const Permutation& f : aut.elements()) {
      ++maps;
      std::set<Vertex> fu;
      for (Vertex x : u) fu.insert(f(x));
      if (fu != u && fu != w) o.fail("an automorphism mixes the parts");
    }
  }
  if (graphs < 100) o.fail("corpus too small");
  if (o.pass) {
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(maps) + " automorphisms";
  }
  return o;
}

void check_group(const PermGroup& g, std::mt19937& rng, Outcome& o) {
  const std::set<Permutation> elems(g.elements().begin(), g.elements().end());
  if (!elems.count(identity(g.degree()))) o.fail("identity missing");
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  const bool exhaustive = g.order() <= 60;
  const std::size_t pairs = exhaustive ? g.order() * g.order() : 3000;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Permutation& a = exhaustive ? g.elements()[i / g.order()] : g.elements()[pick(rng)];
    const Permutation& b = exhaustive ? g.elements()[i % g.order()] : g.elements()[pick(rng)];
    if (!elems.count(compose(a, b)) || !elems.count(inverse(a))) {
      o.fail("closure fails");
      return;
    }
  }
  for (Vertex v = 0; v < g.degree(); ++v) {
    if (g.order() != orbit(g, v).size() * stabilizer(g, v).order()) {
      o.fail("orbit-stabilizer fails");
      return;
    }
  }
}

Outcome group_invariants() {
  Outcome o;
  std::mt19937 rng(77);
  std::size_t groups = 0;
  for (int n = 3; n <= 60; ++n) {
    check_group(affine_group(n), rng, o);
    check_group(translations(n), rng, o);
    groups += 2;
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        for (int c1 = 0; c1 < n; ++c1) {
          for (int c2 = 0; c2 < n; ++c2) {
            const AffineMap a{n, s1, c1}, b{n, s2, c2};
            const AffineMap ab = compose(a, b);
            if (ab.sign != s1 * s2 || ab.shift != ((s1 * c2 + c1) % n + n) % n ||
                ab.to_permutation() != compose(a.to_permutation(), b.to_permutation())) {
              o.fail("affine composition law fails at n=" + std::to_string(n));
            }
          }
        }
      }
    }
  }
  for (int k = 2; k <= 30; ++k) {
    check_group(automorphism_group(andrasfai(k)).group, rng, o);
    ++groups;
  }
  for (const Graph& g : bipartite_corpus()) {
    check_group(automorphism_group(g).group, rng, o);
    ++groups;
  }
  if (o.pass) o.detail = std::to_string(groups) + " groups";
  return o;
}

Outcome k1_degeneracy() {
  Outcome o;
  const std::string cmd = std::string(ANDRASFAI_CLI_PATH) + " verify -k 1 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    o.fail("cannot start " + std::string(ANDRASFAI_CLI_PATH));
    return o;
  }
  std::string text;
  std::array<char, 1024> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code != 2) o.fail("exit code " + std::to_string(code));
  if (text.find("|Aut| = 2") == std::string::npos || text.find("= 4") == std::string::npos) {
    o.fail("message lacks |Aut| = 2 vs 4: " + text);
  }
  if (o.pass) o.detail = text.substr(0, text.find('\n'));
  return o;
}

}  // namespace
}  // namespace andrasfai

int main() {
  using andrasfai::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 theorem reproduction, k = 2..200", andrasfai::theorem_sweep},
      {"2 oracle equivalence, And(2) and And(3)", andrasfai::oracle_equivalence},
      {"3 named isomorphisms", andrasfai::named_isomorphisms},
      {"4 structural metrics", andrasfai::structural_metrics},
      {"5 neighbor formula conformance", andrasfai::neighbor_formulas},
      {"6 certificate soundness and sensitivity", andrasfai::certificate_soundness},
      {"7 bipartite part preservation", andrasfai::bipartite_sides},
      {"8 group-theory invariants", andrasfai::group_invariants},
      {"9 k = 1 degeneracy reported", andrasfai::k1_degeneracy},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  ("
         << secs << " s)";
    if (!o.detail.empty()) line << "  " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
