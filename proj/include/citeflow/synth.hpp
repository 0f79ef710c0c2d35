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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "citeflow/corpus.hpp"

namespace citeflow {

struct IntRange {
  int min = 0;
  int max = 0;
};

// Planted field life cycle. The focal field cites itself with probability
// self_early before tau_drop_year and self_late from then on; every other
// field cites the focal field with probability inbound_early before
// zeta_rise_year and inbound_late from then on.
struct PlantedLifecycle {
  FieldIndex field = 0;
  int tau_drop_year = 0;
  int zeta_rise_year = 0;
  double self_early = 0.15;
  double self_late = 0.85;
  double inbound_early = 0.02;
  double inbound_late = 0.4;
};

struct GeneratorSpec {
  std::uint64_t seed = 1;
  std::size_t field_count = 6;  // first N fields of the taxonomy
  int start_year = 1980;
  int year_count = 30;
  IntRange papers_per_year{20, 20};
  IntRange references{5, 10};
  IntRange keywords_per_paper{3, 6};
  IntRange authors_per_paper{1, 4};
  // Row i: probability that a paper of field i cites field j. Empty means
  // uniform over all fields.
  std::vector<std::vector<double>> propensity;
  double multi_tag_probability = 0.0;
  std::size_t keyword_pool_size = 40;
  double keyword_overlap = 0.1;
  std::size_t author_pool_size = 500;
  std::size_t venues_per_field = 2;
  // Cited candidates are accepted with weight 1 + boost * (share of the
  // candidate's references pointing at the citing paper's field).
  double reciprocity_boost = 0.0;
  std::optional<PlantedLifecycle> lifecycle;

  // Flat `key = value` text; `#` starts a comment. Throws
  // Error(kInvalidArgument) on unknown keys or malformed values.
  static GeneratorSpec parse(std::istream& in, const FieldTaxonomy& taxonomy);
  static GeneratorSpec parse_file(const std::string& path, const FieldTaxonomy& taxonomy);
  // Applies one `key=value` assignment.
  void set(const std::string& key, const std::string& value, const FieldTaxonomy& taxonomy);

  std::string to_text(const FieldTaxonomy& taxonomy) const;
  // Throws Error(kInfeasible) describing the first problem.
  void validate(const FieldTaxonomy& taxonomy) const;
};

// Propensity shortcuts: identity, uniform, and uniform off-diagonal.
std::vector<std::vector<double>> identity_propensity(std::size_t n);
std::vector<std::vector<double>> uniform_propensity(std::size_t n);
std::vector<std::vector<double>> offdiagonal_propensity(std::size_t n);

// Writes the corpus in the record format. The header comment pins the
// generator version, the engine (mt19937_64) and the full spec.
void generate(std::ostream& out, const GeneratorSpec& spec, const FieldTaxonomy& taxonomy);
std::string generate_text(const GeneratorSpec& spec, const FieldTaxonomy& taxonomy);
// Generates, then parses strictly.
Corpus generate_corpus(const GeneratorSpec& spec, std::shared_ptr<const FieldTaxonomy> taxonomy);

}  // namespace citeflow
