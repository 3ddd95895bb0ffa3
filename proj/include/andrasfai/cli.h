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

#ifndef ANDRASFAI_CLI_H_
#define ANDRASFAI_CLI_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "andrasfai/perm_group.h"

namespace andrasfai::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // verification failed or computation refused
  kExitUsage = 2,    // bad flags or domain error
};

struct KRange {
  int lo = 0;
  int hi = 0;
  bool single() const { return lo == hi; }
};

struct RunConfig {
  std::string command;  // gen | aut | verify | cert | props
  std::optional<KRange> k;
  std::optional<int> n;
  std::vector<int> connection;
  bool symmetrize = false;
  std::string format;  // graph6 | dot | edges | json | text
  bool oracle = false;
  std::size_t cap = kDefaultElementCap;
  unsigned threads = 1;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// "7" or "2..6". Throws DomainError on malformed text or lo > hi.
KRange parse_k_range(const std::string& text);

// "1,4,7,10". Throws DomainError on malformed text.
std::vector<int> parse_residues(const std::string& text);

CommandResult cmd_gen(const RunConfig& config);
CommandResult cmd_aut(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_cert(const RunConfig& config);
CommandResult cmd_props(const RunConfig& config);

// Parses argv (without the program name) and dispatches. `env_cap` is the
// value of ANDRASFAI_CAP, if set; --cap takes precedence over it.
CommandResult run(const std::vector<std::string>& args,
                  const std::optional<std::string>& env_cap = std::nullopt);

}  // namespace andrasfai::cli

#endif  // ANDRASFAI_CLI_H_
