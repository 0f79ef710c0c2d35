// Copyright 2026 The citeflow Authors.
//
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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "citeflow/corpus.hpp"
#include "citeflow/graph.hpp"

namespace citeflow::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Format { kCsv, kJson };

struct RunConfig {
  std::string subcommand;
  std::string input_path;
  std::string taxonomy_path;
  std::string output_path;  // empty: stdout
  Format format = Format::kCsv;
  bool strict = false;
  Multiplicity multiplicity = Multiplicity::kFull;
  std::vector<std::string> windows;
  std::vector<std::string> fields;
  std::vector<std::string> echo;  // the original argument vector
};

// Parses `args` (without the program name), runs the subcommand and writes
// reports to the configured output or `out`. Failures print one JSON error
// record to `err`. Returns 0 on success, 1 on analysis or I/O failure and 2
// on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace citeflow::cli
