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

#include "citeflow/diversity.hpp"

#include <algorithm>
#include <cmath>

#include "citeflow/kernels.hpp"
#include "citeflow/text.hpp"

namespace citeflow {

const char* to_string(DiversityMetric m) noexcept { return m == DiversityMetric::kRdi ? "RDI" : "KDI"; }

const char* to_string(KeywordScope s) noexcept { return s == KeywordScope::kWindowLocal ? "window" : "global"; }

double entropy_of_counts(std::span<const double> counts, double total) {
  double h = 0.0;
  for (double c : counts) {
    if (c <= 0.0) continue;
    const double x = c / total;
    h -= x * std::log(x);
  }
  return h;
}

std::optional<double> rdi_value(const CitationGraph& graph, const Corpus& corpus, PaperIndex p) {
  const auto counts = field_ref_counts(graph, corpus, p);
  if (counts.total == 0) return std::nullopt;
  return entropy_of_counts(counts.per_field, static_cast<double>(counts.total));
}

std::optional<double> rdi_paper(const CitationGraph& graph, const Corpus& corpus, PaperId p) {
  return rdi_value(graph, corpus, corpus.index_of(p));
}

FieldKeywordSets FieldKeywordSets::build(const Corpus& corpus, TimeWindow window, KeywordScope scope) {
  FieldKeywordSets sets;
  sets.window_ = window;
  sets.scope_ = scope;
  sets.per_field_.resize(corpus.taxonomy().size());
  const TimeWindow effective = scope == KeywordScope::kCorpusGlobal ? TimeWindow::unbounded() : window;
  for (FieldIndex f = 0; f < sets.per_field_.size(); ++f) {
    auto& pool = sets.per_field_[f];
    for (PaperIndex p : corpus.field_papers(f)) {
      if (!effective.contains(corpus.record(p).year)) continue;
      const auto ids = corpus.keyword_ids(p);
      pool.insert(pool.end(), ids.begin(), ids.end());
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  }
  return sets;
}

bool FieldKeywordSets::contains(FieldIndex f, KeywordId k) const {
  const auto& pool = per_field_.at(f);
  return std::binary_search(pool.begin(), pool.end(), k);
}

std::size_t FieldKeywordSets::intersection_size(FieldIndex f, std::span<const KeywordId> keywords) const {
  const auto& pool = per_field_.at(f);
  std::size_t n = 0;
  auto it = pool.begin();
  for (KeywordId k : keywords) {
    it = std::lower_bound(it, pool.end(), k);
    if (it == pool.end()) break;
    if (*it == k) ++n;
  }
  return n;
}

std::optional<double> kdi_value(const Corpus& corpus, const FieldKeywordSets& sets, PaperIndex p, bool normalized) {
  const auto kp = corpus.keyword_ids(p);
  if (kp.empty()) return std::nullopt;
  const auto size = static_cast<double>(kp.size());
  std::vector<double> x(sets.field_count());
  for (FieldIndex j = 0; j < x.size(); ++j) x[j] = static_cast<double>(sets.intersection_size(j, kp)) / size;
  if (normalized) {
    double total = 0.0;
    for (double v : x) total += v;
    if (total == 0.0) return 0.0;
    for (double& v : x) v /= total;
  }
  double h = 0.0;
  for (double v : x) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

std::optional<double> kdi_paper(const Corpus& corpus, const FieldKeywordSets& sets, PaperId p, bool normalized) {
  return kdi_value(corpus, sets, corpus.index_of(p), normalized);
}

namespace {

template <typename ValueFn>
FieldScore field_mean(const Corpus& corpus, FieldIndex field, TimeWindow window, ValueFn&& value_of) {
  FieldScore score;
  std::vector<double> values;
  for (PaperIndex p : corpus.field_papers(field)) {
    if (!window.contains(corpus.record(p).year)) continue;
    ++score.population;
    if (auto v = value_of(p)) values.push_back(*v);
  }
  score.coverage = values.size();
  if (!values.empty()) score.value = kernels::sum(values) / static_cast<double>(values.size());
  return score;
}

double scale_for(double log_base) { return log_base == std::numbers::e ? 1.0 : std::log(log_base); }

std::optional<double> rescale(std::optional<double> v, double scale) {
  if (!v || scale == 1.0) return v;
  return *v / scale;
}

}  // namespace

FieldScore rdi_field(const CitationGraph& graph, const Corpus& corpus, FieldIndex field, TimeWindow window) {
  return field_mean(corpus, field, window, [&](PaperIndex p) { return rdi_value(graph, corpus, p); });
}

FieldScore kdi_field(const Corpus& corpus, const FieldKeywordSets& sets, FieldIndex field, TimeWindow window,
                     bool normalized) {
  return field_mean(corpus, field, window, [&](PaperIndex p) { return kdi_value(corpus, sets, p, normalized); });
}

std::string log_base_label(double base) {
  if (base == std::numbers::e) return "e";
  return text::format_double(base);
}

std::vector<FieldRanking> rank_fields(const CitationGraph& graph, const Corpus& corpus, DiversityMetric metric,
                                      std::span<const TimeWindow> windows, const DiversityOptions& options) {
  const double scale = scale_for(options.log_base);
  std::vector<FieldRanking> out;
  for (const TimeWindow& window : windows) {
    FieldRanking ranking{window, {}};
    std::optional<FieldKeywordSets> sets;
    if (metric == DiversityMetric::kKdi) sets = FieldKeywordSets::build(corpus, window, options.keyword_scope);
    for (FieldIndex f = 0; f < corpus.taxonomy().size(); ++f) {
      RankedField row;
      row.field = f;
      row.score = metric == DiversityMetric::kRdi ? rdi_field(graph, corpus, f, window)
                                                  : kdi_field(corpus, *sets, f, window, options.kdi_normalized);
      row.value = rescale(row.score.value, scale);
      ranking.rows.push_back(row);
    }
    std::stable_sort(ranking.rows.begin(), ranking.rows.end(), [](const RankedField& a, const RankedField& b) {
      if (a.score.value.has_value() != b.score.value.has_value()) return a.score.value.has_value();
      if (a.score.value && *a.score.value != *b.score.value) return *a.score.value > *b.score.value;
      return a.field < b.field;
    });
    std::size_t rank = 0;
    for (auto& row : ranking.rows) {
      if (row.score.value) row.rank = ++rank;
    }
    out.push_back(std::move(ranking));
  }
  return out;
}

MetricReport ranking_report(std::span<const FieldRanking> rankings, DiversityMetric metric, const CitationGraph& graph,
                            const FieldTaxonomy& taxonomy, const DiversityOptions& options) {
  MetricReport report("rank", {"window_start", "window_end", "field_abbr", "metric", "value", "coverage",
                               "mode_flags", "rank"});
  std::string flags = "multiplicity=" + std::string(to_string(graph.multiplicity())) +
                      ";log=" + log_base_label(options.log_base);
  if (metric == DiversityMetric::kKdi) {
    flags += ";keywords=" + std::string(to_string(options.keyword_scope));
    flags += options.kdi_normalized ? ";kdi=normalized" : ";kdi=literal";
  }
  for (const auto& ranking : rankings) {
    for (const auto& row : ranking.rows) {
      report.add_row({cell(ranking.window.start_year), cell(ranking.window.end_year),
                      cell(taxonomy.abbreviation(row.field)), cell(to_string(metric)), cell(row.value),
                      cell(row.score.coverage), cell(flags),
                      row.rank ? cell(*row.rank) : Cell{}});
    }
  }
  report.set_meta("metric", to_string(metric));
  report.set_meta("log_base", log_base_label(options.log_base));
  report.set_meta("multiplicity", to_string(graph.multiplicity()));
  report.set_meta("tie_break", "ascending field index");
  return report;
}

std::vector<PaperValue> paper_diversity(const CitationGraph& graph, const CorpusView& view, DiversityMetric metric,
                                        const DiversityOptions& options) {
  const Corpus& corpus = view.corpus();
  const double scale = scale_for(options.log_base);
  std::optional<FieldKeywordSets> sets;
  if (metric == DiversityMetric::kKdi) sets = FieldKeywordSets::build(corpus, view.window(), options.keyword_scope);
  std::vector<PaperValue> out;
  for (PaperIndex p : view.papers()) {
    const auto v = metric == DiversityMetric::kRdi ? rdi_value(graph, corpus, p)
                                                   : kdi_value(corpus, *sets, p, options.kdi_normalized);
    if (v) out.push_back({p, scale == 1.0 ? *v : *v / scale});
  }
  return out;
}

}  // namespace citeflow
