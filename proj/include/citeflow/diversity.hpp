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

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "citeflow/corpus.hpp"
#include "citeflow/graph.hpp"
#include "citeflow/report.hpp"

namespace citeflow {

enum class DiversityMetric { kRdi, kKdi };
enum class KeywordScope { kWindowLocal, kCorpusGlobal };

const char* to_string(DiversityMetric m) noexcept;
const char* to_string(KeywordScope s) noexcept;

// -Σ (c/total) ln(c/total) over the nonzero counts; 0·ln 0 is taken as 0.
double entropy_of_counts(std::span<const double> counts, double total);

// Reference diversity of one paper, natural log. Undefined when R_p = 0.
std::optional<double> rdi_value(const CitationGraph& graph, const Corpus& corpus, PaperIndex p);
std::optional<double> rdi_paper(const CitationGraph& graph, const Corpus& corpus, PaperId p);

// The keyword pools K_{F_i}: the union of keywords of every paper tagged
// with field i, taken over either the measured window or the whole corpus.
class FieldKeywordSets {
 public:
  static FieldKeywordSets build(const Corpus& corpus, TimeWindow window, KeywordScope scope);

  const TimeWindow& window() const { return window_; }
  KeywordScope scope() const { return scope_; }
  std::size_t field_count() const { return per_field_.size(); }
  std::span<const KeywordId> keywords(FieldIndex f) const { return per_field_.at(f); }
  bool contains(FieldIndex f, KeywordId k) const;
  // |K_{F_f} ∩ keywords|; `keywords` must be sorted.
  std::size_t intersection_size(FieldIndex f, std::span<const KeywordId> keywords) const;

 private:
  TimeWindow window_;
  KeywordScope scope_ = KeywordScope::kWindowLocal;
  std::vector<std::vector<KeywordId>> per_field_;
};

// Keyword diversity, natural log, with x_j = |K_{F_j} ∩ K_p| / |K_p| taken
// literally (the x_j may sum past 1). `normalized` rescales the x_j to sum
// to 1 first. Undefined when the paper has no keywords.
std::optional<double> kdi_value(const Corpus& corpus, const FieldKeywordSets& sets, PaperIndex p,
                                bool normalized = false);
std::optional<double> kdi_paper(const Corpus& corpus, const FieldKeywordSets& sets, PaperId p,
                                bool normalized = false);

struct FieldScore {
  std::optional<double> value;  // undefined when coverage is 0
  std::size_t coverage = 0;     // papers that entered the mean
  std::size_t population = 0;   // papers of the field in the window
};

// Mean per-paper RDI over the field's papers in `window` having R_p >= 1.
FieldScore rdi_field(const CitationGraph& graph, const Corpus& corpus, FieldIndex field,
                     TimeWindow window);
// Mean per-paper KDI over the field's papers in `window` having keywords.
FieldScore kdi_field(const Corpus& corpus, const FieldKeywordSets& sets, FieldIndex field,
                     TimeWindow window, bool normalized = false);

struct DiversityOptions {
  // Reported values are ln-based values divided by ln(log_base).
  double log_base = std::numbers::e;
  KeywordScope keyword_scope = KeywordScope::kWindowLocal;
  bool kdi_normalized = false;
};

std::string log_base_label(double base);

struct RankedField {
  FieldIndex field = 0;
  FieldScore score;                  // natural-log value
  std::optional<double> value;       // in the configured log base
  std::optional<std::size_t> rank;   // 1-based; empty when undefined
};

struct FieldRanking {
  TimeWindow window;
  std::vector<RankedField> rows;  // ranked rows first, then undefined by index
};

// Ranks are assigned on the natural-log value, descending, ties broken by
// ascending field index.
std::vector<FieldRanking> rank_fields(const CitationGraph& graph, const Corpus& corpus,
                                      DiversityMetric metric, std::span<const TimeWindow> windows,
                                      const DiversityOptions& options = {});

// window_start,window_end,field_abbr,metric,value,coverage,mode_flags,rank
MetricReport ranking_report(std::span<const FieldRanking> rankings, DiversityMetric metric,
                            const CitationGraph& graph, const FieldTaxonomy& taxonomy,
                            const DiversityOptions& options);

struct PaperValue {
  PaperIndex paper = 0;
  double value = 0.0;
};

// Per-paper metric values for every paper of `view` where it is defined.
std::vector<PaperValue> paper_diversity(const CitationGraph& graph, const CorpusView& view,
                                        DiversityMetric metric, const DiversityOptions& options = {});

}  // namespace citeflow
