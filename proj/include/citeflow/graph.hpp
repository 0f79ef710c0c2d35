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
#include <span>
#include <vector>

#include "citeflow/corpus.hpp"
#include "citeflow/report.hpp"

namespace citeflow {

// How a reference to a paper tagged with k fields is spread over fields:
// kFull adds 1 to each of the k fields, kFractional adds 1/k to each.
enum class Multiplicity { kFull, kFractional };

const char* to_string(Multiplicity m) noexcept;

// Square field-by-field matrix, row-major.
struct FieldMatrix {
  std::size_t n = 0;
  std::vector<double> values;

  FieldMatrix() = default;
  explicit FieldMatrix(std::size_t size) : n(size), values(size * size, 0.0) {}

  double& operator()(FieldIndex i, FieldIndex j) { return values[i * n + j]; }
  double operator()(FieldIndex i, FieldIndex j) const { return values[i * n + j]; }
  std::span<const double> row(FieldIndex i) const { return {values.data() + i * n, n}; }
  std::span<double> row(FieldIndex i) { return {values.data() + i * n, n}; }
};

// Resolved citation edges in compressed-row form, forward and inverted.
// Adjacency lists are ascending by paper index (hence by id). Immutable
// once built.
class CitationGraph {
 public:
  static CitationGraph build(const Corpus& corpus, Multiplicity multiplicity = Multiplicity::kFull);

  Multiplicity multiplicity() const { return multiplicity_; }
  std::size_t paper_count() const { return unresolved_.size(); }
  std::size_t edge_count() const { return out_targets_.size(); }

  std::span<const PaperIndex> references(PaperIndex p) const {
    return {out_targets_.data() + out_offsets_[p], out_offsets_[p + 1] - out_offsets_[p]};
  }
  std::span<const PaperIndex> citations(PaperIndex p) const {
    return {in_sources_.data() + in_offsets_[p], in_offsets_[p + 1] - in_offsets_[p]};
  }
  std::uint32_t unresolved(PaperIndex p) const { return unresolved_[p]; }
  std::size_t total_unresolved() const;

  // fieldFlow[i][j] over every resolved edge in the corpus.
  const FieldMatrix& field_flow() const { return field_flow_; }

 private:
  Multiplicity multiplicity_ = Multiplicity::kFull;
  std::vector<std::uint32_t> out_offsets_;
  std::vector<PaperIndex> out_targets_;
  std::vector<std::uint32_t> in_offsets_;
  std::vector<PaperIndex> in_sources_;
  std::vector<std::uint32_t> unresolved_;
  FieldMatrix field_flow_;
};

// R_p(F_j) for every field j (zeros included) and R_p.
struct FieldRefCounts {
  std::vector<double> per_field;
  std::size_t total = 0;
};

FieldRefCounts field_ref_counts(const CitationGraph& graph, const Corpus& corpus, PaperIndex p);
FieldRefCounts per_paper_field_refs(const CitationGraph& graph, const Corpus& corpus, PaperId p);

// Adds the weight each field of `cited` receives under `m` into `row`.
void add_reference_weight(std::span<double> row, FieldSet cited, Multiplicity m);

// fieldFlow restricted to citing papers inside `view`; cited papers may lie
// anywhere in the corpus.
FieldMatrix field_flow(const CitationGraph& graph, const CorpusView& view);

struct CitationFilter {
  // Citing year in [year, year + horizon - 1] when set.
  std::optional<int> horizon_years;
  bool exclude_first_author_self = false;
};

// Case-insensitive trimmed equality of first authors; false when either
// record has no authors.
bool same_first_author(const PaperRecord& a, const PaperRecord& b);

std::vector<PaperIndex> citing_papers(const CitationGraph& graph, const Corpus& corpus,
                                      PaperIndex p, const CitationFilter& filter);
std::size_t count_citing(const CitationGraph& graph, const Corpus& corpus, PaperIndex p,
                         const CitationFilter& filter);
std::vector<PaperId> citations_received(const CitationGraph& graph, const Corpus& corpus, PaperId p,
                                        const CitationFilter& filter);

// `citing_id,cited_id` rows, ascending.
void write_edge_list(std::ostream& out, const CitationGraph& graph, const Corpus& corpus);
MetricReport field_flow_report(const FieldMatrix& flow, const FieldTaxonomy& taxonomy,
                               const std::string& name);

}  // namespace citeflow
