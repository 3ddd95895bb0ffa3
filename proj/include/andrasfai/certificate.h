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

#ifndef ANDRASFAI_CERTIFICATE_H_
#define ANDRASFAI_CERTIFICATE_H_

#include <optional>
#include <string>
#include <vector>

#include "andrasfai/aut_engine.h"
#include "andrasfai/graph.h"
#include "andrasfai/perm_group.h"
#include "json.hpp"

namespace andrasfai {

// Check of one step of the dihedral-automorphism argument for And(k), run
// against a concrete graph and its computed automorphism group.
struct CertificateStep {
  std::string name;
  std::string claim;
  bool pass = false;
  nlohmann::ordered_json witness;
};

struct OracleCheck {
  std::size_t brute_force_order = 0;
  bool agrees = false;
};

struct CertificateReport {
  int k = 0;
  int n = 0;
  std::vector<CertificateStep> steps;
  bool overall = false;
  SearchStats engine_stats;
  std::optional<OracleCheck> oracle;
};

// Step names in report order.
inline const std::vector<std::string>& certificate_step_names() {
  static const std::vector<std::string> names = {
      "h_connected",        "h_bipartite_parts", "h_unique_degrees",
      "h_inverse_pairing",  "stabilizer_of_zero", "v1_neighbor_counts",
      "counting",           "structure"};
  return names;
}

struct CertificateOptions {
  EngineOptions engine;
  // Cross-check against brute_force_automorphisms when n <= 10.
  bool oracle = false;
};

// H: the subgraph of And(k) induced on (V0 \ {0}) u V2, 2(k-1) vertices.
// Throws DomainError for k < 2.
InducedSubgraph build_h(int k);
// Same vertex set taken from an arbitrary graph on 3k-1 vertices.
InducedSubgraph build_h(const Graph& g, int k);

// h_connected, h_bipartite_parts, h_unique_degrees, h_inverse_pairing.
std::vector<CertificateStep> check_h_structure(int k);
std::vector<CertificateStep> check_h_structure(const Graph& g, int k);

CertificateStep check_stabilizer_of_zero(int k, const PermGroup& aut);
CertificateStep check_v1_neighbor_counts(int k);
CertificateStep check_v1_neighbor_counts(const Graph& g, int k);
CertificateStep check_counting(int k, const PermGroup& aut);
CertificateStep check_structure(int k, const PermGroup& aut);

// Runs every step against g (which must have 3k-1 vertices) and its
// automorphism group.
CertificateReport certify_graph(const Graph& g, int k, const PermGroup& aut,
                                const SearchStats& stats = {});

// Builds And(k), computes its automorphism group, and certifies it. Throws
// TheoremHypothesisError for k < 2; for k = 1 the message carries the
// computed |Aut(K2)|.
CertificateReport verify_theorem(int k, const CertificateOptions& options = {});

nlohmann::ordered_json to_json(const CertificateReport& report);

// One "[PASS] name: claim" line per step plus a summary line.
std::string to_text(const CertificateReport& report);

}  // namespace andrasfai

#endif  // ANDRASFAI_CERTIFICATE_H_
