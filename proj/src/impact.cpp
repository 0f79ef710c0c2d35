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

#include "citeflow/impact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "citeflow/error.hpp"
#include "citeflow/kernels.hpp"
#include "citeflow/text.hpp"

namespace citeflow {

std::size_t cp(const CitationGraph& graph, const Corpus& corpus, PaperId p, const ImpactOptions& options) {
  return count_citing(graph, corpus, corpus.index_of(p), {options.horizon_years, options.exclude_first_author_self});
}

JifTable::JifTable(const CitationGraph& graph, const Corpus& corpus) : graph_(&graph), corpus_(&corpus) {
  for (PaperIndex p = 0; p < corpus.size(); ++p) {
    const auto& r = corpus.record(p);
    if (!r.venue.empty()) venues_[r.venue][r.year].push_back(p);
  }
}

std::optional<double> JifTable::operator()(const std::string& venue, int year) const {
  const auto v = venues_.find(venue);
  if (v == venues_.end()) return std::nullopt;
  std::size_t papers = 0;
  std::size_t citations = 0;
  for (int y : {year - 1, year - 2}) {
    const auto it = v->second.find(y);
    if (it == v->second.end()) continue;
    papers += it->second.size();
    for (PaperIndex p : it->second) {
      for (PaperIndex q : graph_->citations(p)) citations += corpus_->record(q).year == year ? 1 : 0;
    }
  }
  if (papers == 0) return std::nullopt;
  return static_cast<double>(citations) / static_cast<double>(papers);
}

std::optional<double> jif(const Corpus& corpus, const CitationGraph& graph, const std::string& venue, int year) {
  return JifTable(graph, corpus)(venue, year);
}

ImpactScores::ImpactScores(std::vector<PaperImpact> rows, ImpactOptions options)
    : rows_(std::move(rows)), options_(options) {
  std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) { return a.paper < b.paper; });
  top_threshold_ = std::numeric_limits<std::size_t>::max();
  for (const auto& r : rows_) {
    if (!r.top_cited) continue;
    ++top_count_;
    top_threshold_ = std::min(top_threshold_, r.ranking_key);
  }
  if (top_count_ == 0) top_threshold_ = 0;
}

const PaperImpact* ImpactScores::find(PaperIndex p) const {
  const auto it = std::lower_bound(rows_.begin(), rows_.end(), p, [](const auto& r, PaperIndex v) { return r.paper < v; });
  return it != rows_.end() && it->paper == p ? &*it : nullptr;
}

std::vector<bool> mark_top(std::span<const std::size_t> keys, double fraction) {
  std::vector<bool> top(keys.size(), false);
  if (keys.empty()) return top;
  const auto n = static_cast<double>(keys.size());
  auto k = static_cast<std::size_t>(std::ceil(fraction * n - 1e-9));
  k = std::clamp<std::size_t>(k, 1, keys.size());
  std::vector<std::size_t> sorted(keys.begin(), keys.end());
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k - 1), sorted.end(),
                   std::greater<>());
  const std::size_t threshold = sorted[k - 1];
  for (std::size_t i = 0; i < keys.size(); ++i) top[i] = keys[i] >= threshold;
  return top;
}

ImpactScores compute_impact(const CitationGraph& graph, const CorpusView& population, const ImpactOptions& options) {
  const Corpus& corpus = population.corpus();
  const JifTable jif_table(graph, corpus);
  const CitationFilter horizon{options.horizon_years, options.exclude_first_author_self};
  const CitationFilter lifetime{std::nullopt, options.exclude_first_author_self};
  std::vector<PaperImpact> rows;
  std::vector<std::size_t> keys;
  rows.reserve(population.size());
  for (PaperIndex p : population.papers()) {
    PaperImpact row;
    row.paper = p;
    row.cp = count_citing(graph, corpus, p, horizon);
    row.ranking_key = options.lifetime_ranking ? count_citing(graph, corpus, p, lifetime) : row.cp;
    const auto& r = corpus.record(p);
    if (!r.venue.empty()) row.jif = jif_table(r.venue, r.year);
    keys.push_back(row.ranking_key);
    rows.push_back(row);
  }
  const auto top = mark_top(keys, options.top_fraction);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].top_cited = top[i];
  return ImpactScores(std::move(rows), options);
}

ShareResult top_cited_share(const ImpactScores& scores, const Corpus& corpus, FieldIndex field, TimeWindow window,
                            ShareMode mode) {
  std::size_t population = 0;
  std::size_t top = 0;
  std::size_t field_papers = 0;
  std::size_t hits = 0;
  for (const auto& row : scores.rows()) {
    const auto& r = corpus.record(row.paper);
    if (!window.contains(r.year)) continue;
    ++population;
    const bool in_field = r.fields.contains(field);
    top += row.top_cited ? 1 : 0;
    field_papers += in_field ? 1 : 0;
    hits += (row.top_cited && in_field) ? 1 : 0;
  }
  if (population == 0) throw Error(ErrorCode::kEmptyInput, "top_cited_share: no scored papers in " + window.to_string());
  ShareResult out;
  out.numerator = hits;
  out.denominator = mode == ShareMode::kShareOfTop ? top : field_papers;
  if (out.denominator > 0) out.fraction = static_cast<double>(hits) / static_cast<double>(out.denominator);
  return out;
}

std::size_t bucket_of(double v, double lo, double hi, std::size_t n_buckets) {
  if (n_buckets <= 1 || !(hi > lo)) return 0;
  const auto n = static_cast<double>(n_buckets);
  const double pos = (v - lo) / (hi - lo) * n;
  const double nearest = std::round(pos);
  const double tolerance = 64.0 * std::numeric_limits<double>::epsilon() * n;
  const double snapped = std::abs(pos - nearest) <= tolerance ? nearest : std::floor(pos);
  if (snapped <= 0.0) return 0;
  return std::min(static_cast<std::size_t>(snapped), n_buckets - 1);
}

BucketAnalysis bucket_impact(std::span<const PaperValue> values, const ImpactScores& scores, std::size_t n_buckets) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "bucket_impact: no paper has a defined metric value");
  if (n_buckets == 0) throw Error(ErrorCode::kInvalidArgument, "bucket_impact: bucket count must be positive");
  const auto [min_it, max_it] =
      std::minmax_element(values.begin(), values.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  const double lo = min_it->value;
  const double hi = max_it->value;

  BucketAnalysis out;
  out.degenerate = !(hi > lo);
  const std::size_t n = out.degenerate ? 1 : n_buckets;
  out.assignment.reserve(values.size());
  for (const auto& v : values) out.assignment.push_back(out.degenerate ? 0 : bucket_of(v.value, lo, hi, n));

  const double width = (hi - lo) / static_cast<double>(n);
  for (std::size_t b = 0; b < n; ++b) {
    ImpactBucket bucket;
    bucket.index = b + 1;
    bucket.lo = lo + width * static_cast<double>(b);
    bucket.hi = b + 1 == n ? hi : lo + width * static_cast<double>(b + 1);
    std::vector<double> cps;
    std::vector<double> jifs;
    std::size_t top = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (out.assignment[i] != b) continue;
      ++bucket.count;
      const PaperImpact* s = scores.find(values[i].paper);
      if (s == nullptr) continue;
      cps.push_back(static_cast<double>(s->cp));
      if (s->jif) jifs.push_back(*s->jif);
      top += s->top_cited ? 1 : 0;
    }
    if (!cps.empty()) {
      bucket.mean_cp = kernels::sum(cps) / static_cast<double>(cps.size());
      bucket.top_cited_share = static_cast<double>(top) / static_cast<double>(cps.size());
    }
    if (!jifs.empty()) bucket.mean_jif = kernels::sum(jifs) / static_cast<double>(jifs.size());
    out.buckets.push_back(bucket);
  }
  return out;
}

MetricReport bucket_report(const BucketAnalysis& analysis) {
  MetricReport report("buckets",
                      {"bucket_index", "bucket_lo", "bucket_hi", "count", "mean_cp", "mean_jif", "top_cited_share"});
  for (const auto& b : analysis.buckets) {
    report.add_row({cell(b.index), cell(b.lo), cell(b.hi), cell(b.count), cell(b.mean_cp), cell(b.mean_jif),
                    cell(b.top_cited_share)});
  }
  report.set_meta("degenerate", analysis.degenerate ? "true" : "false");
  report.set_meta("intervals", "left-closed, last bucket right-closed");
  report.set_meta("jif", "corpus-derived");
  return report;
}

MetricReport impact_report(const ImpactScores& scores, const Corpus& corpus) {
  MetricReport report("impact", {"paper_id", "year", "venue", "venue_kind", "cp", "jif", "top_cited"});
  for (const auto& row : scores.rows()) {
    const auto& r = corpus.record(row.paper);
    report.add_row({cell(static_cast<std::int64_t>(r.id)), cell(r.year), cell(r.venue),
                    cell(to_string(corpus.taxonomy().venue_kind(r.venue))), cell(row.cp), cell(row.jif),
                    cell(row.top_cited ? 1 : 0)});
  }
  const auto& o = scores.options();
  report.set_meta("horizon_years", std::to_string(o.horizon_years));
  report.set_meta("exclude_first_author_self", o.exclude_first_author_self ? "true" : "false");
  report.set_meta("top_ranking", o.lifetime_ranking ? "lifetime" : "cp");
  report.set_meta("top_fraction", text::format_double(o.top_fraction));
  report.set_meta("top_count", std::to_string(scores.top_count()));
  report.set_meta("top_threshold", std::to_string(scores.top_threshold()));
  report.set_meta("jif", "corpus-derived");
  return report;
}

}  // namespace citeflow
