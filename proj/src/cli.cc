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

#include "andrasfai/cli.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "andrasfai/aut_engine.h"
#include "andrasfai/certificate.h"
#include "andrasfai/errors.h"
#include "andrasfai/graph.h"
#include "andrasfai/graph_io.h"
#include "json.hpp"

namespace andrasfai::cli {

namespace {

using json = nlohmann::ordered_json;

CommandResult usage(const std::string& message) {
  return CommandResult{kExitUsage, "", message + "\n"};
}

CommandResult failure(const std::string& message) {
  return CommandResult{kExitFailure, "", message + "\n"};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw DomainError("not an integer: '" + text + "'");
  }
  return value;
}

struct Selection {
  Graph graph;
  std::optional<int> k;
};

// Exactly one of -k or (-n, -C).
Selection select_graph(const RunConfig& config) {
  if (config.k && config.n) throw DomainError("give either -k or -n/-C, not both");
  if (config.k) {
    if (!config.k->single()) {
      throw DomainError("'" + config.command + "' takes a single k, not a range");
    }
    return Selection{andrasfai(config.k->lo), config.k->lo};
  }
  if (!config.n) throw DomainError("a graph selector is required: -k K or -n N -C LIST");
  const ConnectionSet c = config.symmetrize
                              ? ConnectionSet::symmetrized(*config.n, config.connection)
                              : ConnectionSet(*config.n, config.connection);
  return Selection{cayley_graph(c), std::nullopt};
}

EngineOptions engine_options(const RunConfig& config) {
  EngineOptions options;
  options.cap = config.cap;
  options.threads = config.threads;
  return options;
}

// Runs `fn(k)` for every k in the range on a small pool; results come back
// in ascending k regardless of completion order.
template <typename Result, typename Fn>
std::vector<Result> sweep(const KRange& range, Fn fn, std::vector<std::exception_ptr>& errors) {
  const std::size_t count = static_cast<std::size_t>(range.hi - range.lo + 1);
  std::vector<Result> results(count);
  errors.assign(count, nullptr);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(range.lo + static_cast<int>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

KRange parse_k_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  KRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw DomainError("empty k range '" + text + "'");
  return r;
}

std::vector<int> parse_residues(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    out.push_back(parse_int(item));
  }
  if (out.empty()) throw DomainError("empty connection set");
  return out;
}

CommandResult cmd_gen(const RunConfig& config) {
  try {
    const Selection sel = select_graph(config);
    const std::string format = config.format.empty() ? "graph6" : config.format;
    if (format == "graph6") return {kExitOk, to_graph6(sel.graph), ""};
    if (format == "dot") return {kExitOk, to_dot(sel.graph), ""};
    if (format == "edges") return {kExitOk, to_edge_list(sel.graph), ""};
    if (format == "json") {
      json j;
      j["n"] = sel.graph.order();
      json edges = json::array();
      for (const auto& [u, v] : sel.graph.edges()) edges.push_back({u, v});
      j["edges"] = std::move(edges);
      return {kExitOk, dump(j), ""};
    }
    return usage("gen: unsupported format '" + format + "'");
  } catch (const DomainError& e) {
    return usage(e.what());
  }
}

CommandResult cmd_aut(const RunConfig& config) {
  try {
    const Selection sel = select_graph(config);
    const AutomorphismResult aut = automorphism_group(sel.graph, engine_options(config));
    json j = to_json(aut.group);
    j["stats"] = to_json(aut.stats);
    return {kExitOk, dump(j), ""};
  } catch (const GroupTooLargeError& e) {
    return failure(e.what());
  } catch (const DomainError& e) {
    return usage(e.what());
  }
}

CommandResult cmd_verify(const RunConfig& config) {
  if (config.n || !config.k) return usage("verify needs -k K or -k LO..HI");
  CertificateOptions options;
  options.engine = engine_options(config);
  options.oracle = config.oracle;
  if (config.k->lo < 2) {
    try {
      verify_theorem(config.k->lo, options);
    } catch (const DomainError& e) {
      return usage(e.what());
    }
  }
  std::vector<std::exception_ptr> errors;
  auto reports = sweep<std::optional<CertificateReport>>(
      *config.k, [&](int k) { return std::optional(verify_theorem(k, options)); }, errors);

  json out;
  json list = json::array();
  bool all_pass = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const GroupTooLargeError& e) {
        return failure(e.what());
      } catch (const DomainError& e) {
        return usage(e.what());
      }
    }
    const CertificateReport& r = *reports[i];
    all_pass = all_pass && r.overall && (!r.oracle || r.oracle->agrees);
    list.push_back(to_json(r));
  }
  out["reports"] = std::move(list);
  out["all_pass"] = all_pass;
  return {all_pass ? kExitOk : kExitFailure, dump(out), ""};
}

CommandResult cmd_cert(const RunConfig& config) {
  if (config.n || !config.k || !config.k->single()) return usage("cert needs a single -k K");
  CertificateOptions options;
  options.engine = engine_options(config);
  options.oracle = config.oracle;
  try {
    const CertificateReport r = verify_theorem(config.k->lo, options);
    const bool pass = r.overall && (!r.oracle || r.oracle->agrees);
    const std::string format = config.format.empty() ? "text" : config.format;
    if (format == "json") return {pass ? kExitOk : kExitFailure, dump(to_json(r)), ""};
    if (format != "text") return usage("cert: unsupported format '" + format + "'");
    return {pass ? kExitOk : kExitFailure, to_text(r), ""};
  } catch (const GroupTooLargeError& e) {
    return failure(e.what());
  } catch (const DomainError& e) {
    return usage(e.what());
  }
}

CommandResult cmd_props(const RunConfig& config) {
  try {
    const Selection sel = select_graph(config);
    const Graph& g = sel.graph;
    const bool connected = is_connected(g);
    json j;
    if (sel.k) j["k"] = *sel.k;
    j["n"] = g.order();
    const auto reg = regular_degree(g);
    j["regular_degree"] = reg ? json(*reg) : json(nullptr);
    j["connected"] = connected;
    j["bipartite"] = is_bipartite(g).has_value();
    j["diameter"] = connected ? json(diameter(g)) : json(nullptr);
    const auto gir = girth(g);
    j["girth"] = gir ? json(*gir) : json("infinity");
    j["triangle_free"] = is_triangle_free(g);
    j["vertex_transitive"] = is_vertex_transitive(g, engine_options(config));
    if (sel.k && *sel.k <= 2) {
      j["note"] = *sel.k == 1
                      ? "And(1) is K2: diameter 1 and no cycles; diameter 2 and girth 4 hold "
                        "from k = 3 on"
                      : "And(2) is C5: girth 5; diameter 2 and girth 4 hold from k = 3 on";
    }
    return {kExitOk, dump(j), ""};
  } catch (const GroupTooLargeError& e) {
    return failure(e.what());
  } catch (const DomainError& e) {
    return usage(e.what());
  }
}

CommandResult run(const std::vector<std::string>& args, const std::optional<std::string>& env_cap) {
  CLI::App app{"Andrasfai graphs, circulant Cayley graphs and their automorphism groups",
               "andrasfai"};
  app.require_subcommand(1);

  std::string k_text, c_text, oracle_text = "off";
  std::optional<int> n;
  RunConfig config;
  std::optional<std::size_t> cap_flag;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gen", "emit a graph as graph6, DOT, edge list or JSON"},
      {"aut", "compute the automorphism group (JSON)"},
      {"verify", "check the dihedral automorphism certificate for k or a range LO..HI"},
      {"cert", "print the certificate for a single k"},
      {"props", "structural properties (JSON)"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-k", k_text, "Andrasfai parameter k, or LO..HI for verify");
    sub->add_option("-n", n, "modulus of a circulant graph");
    sub->add_option("-C", c_text, "comma-separated connection set residues");
    sub->add_flag("--symmetrize", config.symmetrize, "add n-c for every given c");
    sub->add_option("--format", config.format, "graph6|dot|edges|json (gen), text|json (cert)")
        ->check(CLI::IsMember({"graph6", "dot", "edges", "json", "text"}));
    sub->add_option("--oracle", oracle_text, "cross-check with brute force for n <= 10")
        ->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--cap", cap_flag, "group element cap (overrides ANDRASFAI_CAP)");
    sub->add_option("--threads", config.threads, "search workers (0 = all cores)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream out, err;
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitUsage, out.str(), err.str()};
  }

  config.command = app.get_subcommands().front()->get_name();
  config.oracle = oracle_text == "on";
  config.n = n;
  try {
    if (!k_text.empty()) config.k = parse_k_range(k_text);
    if (!c_text.empty()) config.connection = parse_residues(c_text);
    if (n && c_text.empty()) throw DomainError("-n needs a connection set -C");
    if (!n && !c_text.empty()) throw DomainError("-C needs a modulus -n");
    if (env_cap && !env_cap->empty()) {
      const long long v = std::stoll(*env_cap);
      if (v <= 0) throw DomainError("ANDRASFAI_CAP must be positive");
      config.cap = static_cast<std::size_t>(v);
    }
    if (cap_flag) config.cap = *cap_flag;
  } catch (const DomainError& e) {
    return usage(e.what());
  } catch (const std::exception&) {
    return usage("ANDRASFAI_CAP is not a number: '" + env_cap.value_or("") + "'");
  }

  if (config.command == "gen") return cmd_gen(config);
  if (config.command == "aut") return cmd_aut(config);
  if (config.command == "verify") return cmd_verify(config);
  if (config.command == "cert") return cmd_cert(config);
  return cmd_props(config);
}

}  // namespace andrasfai::cli
