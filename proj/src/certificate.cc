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

#include "andrasfai/certificate.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "andrasfai/errors.h"

namespace andrasfai {

namespace {

using json = nlohmann::ordered_json;

void require_k(int k) {
  if (k < 2) {
    throw DomainError("certificate steps need k >= 2, got k=" + std::to_string(k));
  }
}

void require_order(const Graph& g, int k) {
  if (g.order() != 3 * k - 1) {
    throw DomainError("graph has " + std::to_string(g.order()) +
                      " vertices, expected 3k-1 = " + std::to_string(3 * k - 1));
  }
}

std::vector<Vertex> w0_of(int k) {
  std::vector<Vertex> w0;
  for (int j = 1; j <= k - 1; ++j) w0.push_back(3 * j);
  return w0;
}

std::vector<Vertex> map_back(const InducedSubgraph& h, const std::vector<Vertex>& local) {
  std::vector<Vertex> out;
  for (Vertex v : local) out.push_back(h.original[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> image_of(const Permutation& p, const std::vector<Vertex>& set) {
  std::vector<Vertex> out;
  for (Vertex v : set) out.push_back(p(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Original-label degree table of H for the vertices in `side`.
std::map<Vertex, int> degrees_in_h(const InducedSubgraph& h, const std::vector<Vertex>& side) {
  std::map<Vertex, int> out;
  for (Vertex v : side) out[v] = h.graph.degree(*h.index_of(v));
  return out;
}

// Vertex of `side` with H-degree j, if exactly one exists.
std::optional<Vertex> unique_with_degree(const std::map<Vertex, int>& degrees, int j) {
  std::optional<Vertex> hit;
  for (const auto& [v, d] : degrees) {
    if (d != j) continue;
    if (hit) return std::nullopt;
    hit = v;
  }
  return hit;
}

json degree_table(const std::map<Vertex, int>& degrees) {
  json out = json::object();
  for (const auto& [v, d] : degrees) out[std::to_string(v)] = d;
  return out;
}

}  // namespace

InducedSubgraph build_h(const Graph& g, int k) {
  require_k(k);
  require_order(g, k);
  const TriPartition parts = tri_partition(k);
  std::vector<Vertex> vertices = w0_of(k);
  vertices.insert(vertices.end(), parts.v2.begin(), parts.v2.end());
  return induced_subgraph(g, vertices);
}

InducedSubgraph build_h(int k) {
  require_k(k);
  return build_h(andrasfai(k), k);
}

std::vector<CertificateStep> check_h_structure(const Graph& g, int k) {
  const InducedSubgraph h = build_h(g, k);
  const int n = 3 * k - 1;
  const std::vector<Vertex> w0 = w0_of(k);
  const std::vector<Vertex> v2 = tri_partition(k).v2;
  std::vector<CertificateStep> steps;

  {
    CertificateStep s{"h_connected",
                      "H, induced on W0 = V0 \\ {0} together with V2, is connected", false, {}};
    s.pass = is_connected(h.graph);
    s.witness = {{"vertices", h.graph.order()}, {"edges", h.graph.edge_count()}};
    steps.push_back(std::move(s));
  }

  {
    CertificateStep s{"h_bipartite_parts",
                      "H is bipartite with parts W0 and V2, each of size k-1", false, {}};
    const auto bip = is_bipartite(h.graph);
    if (bip) {
      const std::vector<Vertex> u = map_back(h, bip->part_u);
      const std::vector<Vertex> w = map_back(h, bip->part_w);
      const bool parts_match = (u == w0 && w == v2) || (u == v2 && w == w0);
      s.pass = parts_match && static_cast<int>(w0.size()) == k - 1 &&
               static_cast<int>(v2.size()) == k - 1;
      s.witness = {{"part_u", u}, {"part_w", w}};
    } else {
      s.witness = {{"bipartite", false}};
    }
    steps.push_back(std::move(s));
  }

  const auto deg_w0 = degrees_in_h(h, w0);
  const auto deg_v2 = degrees_in_h(h, v2);

  {
    CertificateStep s{"h_unique_degrees",
                      "for 1 <= j <= k-1, 3j is the only vertex of H-degree j in W0 and "
                      "3k-1-3j the only one in V2",
                      true, {}};
    for (int j = 1; j <= k - 1; ++j) {
      if (unique_with_degree(deg_w0, j) != std::optional<Vertex>(3 * j) ||
          unique_with_degree(deg_v2, j) != std::optional<Vertex>(n - 3 * j)) {
        s.pass = false;
      }
    }
    s.witness = {{"w0_degrees", degree_table(deg_w0)}, {"v2_degrees", degree_table(deg_v2)}};
    if (k == 2) s.witness["note"] = "degenerate: H is a single edge, one vertex per side";
    steps.push_back(std::move(s));
  }

  {
    CertificateStep s{"h_inverse_pairing",
                      "the degree-j vertices of W0 and V2 are negatives of each other "
                      "mod 3k-1",
                      true, {}};
    json pairs = json::array();
    for (int j = 1; j <= k - 1; ++j) {
      const auto v = unique_with_degree(deg_w0, j);
      const auto w = unique_with_degree(deg_v2, j);
      if (!v || !w || (*v + *w) % n != 0) {
        s.pass = false;
        continue;
      }
      pairs.push_back({{"degree", j}, {"v", *v}, {"w", *w}});
    }
    s.witness = {{"pairs", std::move(pairs)}};
    steps.push_back(std::move(s));
  }
  return steps;
}

std::vector<CertificateStep> check_h_structure(int k) {
  require_k(k);
  return check_h_structure(andrasfai(k), k);
}

CertificateStep check_stabilizer_of_zero(int k, const PermGroup& aut) {
  require_k(k);
  const int n = 3 * k - 1;
  CertificateStep s{"stabilizer_of_zero",
                    "the automorphisms fixing 0 are exactly the identity and x -> -x",
                    false, {}};
  if (aut.degree() != n) {
    s.witness = {{"error", "group degree differs from 3k-1"}};
    return s;
  }
  const PermGroup a0 = stabilizer(aut, 0);
  const Permutation id = identity(n);
  const Permutation neg = negation(n);
  std::vector<Permutation> expected = {id, neg};
  std::sort(expected.begin(), expected.end());
  bool pass = a0.elements() == expected;

  const std::vector<Vertex> w0 = w0_of(k);
  const std::vector<Vertex> v2 = tri_partition(k).v2;
  json cases = json::array();
  for (const Permutation& f : a0.elements()) {
    const std::vector<Vertex> img = image_of(f, w0);
    std::string tag = "other";
    bool consistent = false;
    if (img == w0) {
      tag = "fixes W0";
      consistent = f == id;
    } else if (img == v2) {
      tag = "swaps W0 and V2";
      consistent = f == neg;
    }
    pass = pass && consistent;
    cases.push_back({{"map", f.to_cycle_string()}, {"case", tag}, {"consistent", consistent}});
  }
  s.pass = pass;
  s.witness = {{"stabilizer_order", a0.order()}, {"elements", std::move(cases)}};
  return s;
}

CertificateStep check_v1_neighbor_counts(const Graph& g, int k) {
  require_k(k);
  require_order(g, k);
  CertificateStep s{"v1_neighbor_counts",
                    "vertex 3j+1 has exactly j+1 neighbors in V0 (0 included), so the "
                    "counts are distinct across V1",
                    true, {}};
  const TriPartition parts = tri_partition(k);
  std::set<int> seen;
  json rows = json::array();
  for (int j = 0; j <= k - 1; ++j) {
    const Vertex v = 3 * j + 1;
    int in_v0 = 0;
    for (Vertex u : parts.v0) in_v0 += g.has_edge(v, u) ? 1 : 0;
    const int in_w0 = in_v0 - (g.has_edge(v, 0) ? 1 : 0);
    if (in_v0 != j + 1 || !seen.insert(in_v0).second) s.pass = false;
    rows.push_back({{"vertex", v}, {"neighbors_in_v0", in_v0}, {"neighbors_in_w0", in_w0}});
  }
  s.witness = {{"counts", std::move(rows)}};
  return s;
}

CertificateStep check_v1_neighbor_counts(int k) {
  require_k(k);
  return check_v1_neighbor_counts(andrasfai(k), k);
}

CertificateStep check_counting(int k, const PermGroup& aut) {
  require_k(k);
  const int n = 3 * k - 1;
  CertificateStep s{"counting",
                    "Aut is transitive and |Aut| = |orbit(0)| * |stabilizer(0)| = 2(3k-1)",
                    false, {}};
  if (aut.degree() != n) {
    s.witness = {{"error", "group degree differs from 3k-1"}};
    return s;
  }
  const std::size_t orbit_size = orbit(aut, 0).size();
  const std::size_t stab_order = stabilizer(aut, 0).order();
  const std::size_t expected = 2 * static_cast<std::size_t>(n);
  s.pass = orbit_size == static_cast<std::size_t>(n) &&
           aut.order() == orbit_size * stab_order && aut.order() == expected;
  s.witness = {{"orbit_size", orbit_size},
               {"stabilizer_order", stab_order},
               {"order", aut.order()},
               {"expected", expected}};
  return s;
}

CertificateStep check_structure(int k, const PermGroup& aut) {
  require_k(k);
  const int n = 3 * k - 1;
  CertificateStep s{"structure",
                    "the translations S form a normal subgroup with S n A0 = 1 and "
                    "S A0 = Aut, so Aut is the affine group of Z_n, dihedral of order 2n",
                    false, {}};
  if (aut.degree() != n) {
    s.witness = {{"error", "group degree differs from 3k-1"}};
    return s;
  }
  const PermGroup trans = translations(n);
  const PermGroup a0 = stabilizer(aut, 0);

  const bool contained = is_subgroup(trans, aut);
  const bool normal = contained && is_normal(trans, aut);

  std::vector<Permutation> meet;
  std::set_intersection(trans.elements().begin(), trans.elements().end(),
                        a0.elements().begin(), a0.elements().end(),
                        std::back_inserter(meet));
  std::vector<Permutation> product;
  for (const Permutation& t : trans.elements()) {
    for (const Permutation& a : a0.elements()) product.push_back(compose(t, a));
  }
  std::sort(product.begin(), product.end());
  product.erase(std::unique(product.begin(), product.end()), product.end());
  const bool trivial_meet = meet.size() == 1 && meet.front().is_identity();
  const bool product_is_aut = product == aut.elements();
  const bool semidirect = contained && is_semidirect(aut, trans, a0);

  const bool affine = aut == affine_group(n);

  json dihedral = nullptr;
  if (aut.order() % 2 == 0 && aut.order() >= 6) {
    if (auto w = is_dihedral(aut)) {
      dihedral = {{"rotation", w->rotation.to_cycle_string()},
                  {"reflection", w->reflection.to_cycle_string()}};
    }
  }

  s.pass = contained && normal && trivial_meet && product_is_aut && semidirect && affine &&
           !dihedral.is_null();
  s.witness = {{"translations_in_aut", contained},
               {"translations_normal", normal},
               {"intersection_order", meet.size()},
               {"product_order", product.size()},
               {"semidirect", semidirect},
               {"equals_affine_group", affine},
               {"dihedral_witness", std::move(dihedral)}};
  return s;
}

CertificateReport certify_graph(const Graph& g, int k, const PermGroup& aut,
                                const SearchStats& stats) {
  require_k(k);
  require_order(g, k);
  CertificateReport report;
  report.k = k;
  report.n = 3 * k - 1;
  report.steps = check_h_structure(g, k);
  report.steps.push_back(check_stabilizer_of_zero(k, aut));
  report.steps.push_back(check_v1_neighbor_counts(g, k));
  report.steps.push_back(check_counting(k, aut));
  report.steps.push_back(check_structure(k, aut));
  report.overall = std::all_of(report.steps.begin(), report.steps.end(),
                               [](const CertificateStep& s) { return s.pass; });
  report.engine_stats = stats;
  return report;
}

CertificateReport verify_theorem(int k, const CertificateOptions& options) {
  if (k == 1) {
    const std::size_t order = brute_force_automorphisms(andrasfai(1)).order();
    throw TheoremHypothesisError(
        "k = 1 is degenerate: And(1) = K2 has |Aut| = " + std::to_string(order) +
        " (full enumeration of Sym(2)), but 2(3k-1) = 4; dihedral verification "
        "requires k >= 2");
  }
  if (k < 2) {
    throw TheoremHypothesisError("dihedral verification requires k >= 2, got k=" +
                                 std::to_string(k));
  }
  const Graph g = andrasfai(k);
  const AutomorphismResult aut = automorphism_group(g, options.engine);
  CertificateReport report = certify_graph(g, k, aut.group, aut.stats);
  if (options.oracle && g.order() <= kBruteForceMaxOrder) {
    const PermGroup brute = brute_force_automorphisms(g, options.engine.cap);
    report.oracle = OracleCheck{brute.order(), brute == aut.group};
  }
  return report;
}

nlohmann::ordered_json to_json(const CertificateReport& report) {
  json j;
  j["k"] = report.k;
  j["n"] = report.n;
  json steps = json::array();
  for (const CertificateStep& s : report.steps) {
    steps.push_back({{"name", s.name}, {"claim", s.claim}, {"pass", s.pass}, {"witness", s.witness}});
  }
  j["steps"] = std::move(steps);
  j["overall"] = report.overall;
  j["engine_stats"] = to_json(report.engine_stats);
  if (report.oracle) {
    j["oracle"] = {{"brute_force_order", report.oracle->brute_force_order},
                   {"agrees", report.oracle->agrees}};
  }
  return j;
}

std::string to_text(const CertificateReport& report) {
  std::string out = "And(" + std::to_string(report.k) + "), n = " + std::to_string(report.n) + "\n";
  for (const CertificateStep& s : report.steps) {
    out += (s.pass ? "[PASS] " : "[FAIL] ") + s.name + ": " + s.claim + "\n";
  }
  if (report.oracle) {
    out += std::string(report.oracle->agrees ? "[PASS] " : "[FAIL] ") +
           "oracle: brute force finds " + std::to_string(report.oracle->brute_force_order) +
           " automorphisms\n";
  }
  out += std::string("overall: ") + (report.overall ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace andrasfai
