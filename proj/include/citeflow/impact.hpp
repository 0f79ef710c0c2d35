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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "citeflow/corpus.hpp"
#include "citeflow/diversity.hpp"
#include "citeflow/graph.hpp"
#include "citeflow/report.hpp"

namespace citeflow {

struct ImpactOptions {
  int horizon_years = 5;
  bool exclude_first_author_self = true;
  // Rank the top set by all-time citations instead of cp.
  bool lifetime_ranking = false;
  double top_fraction = 0.05;
};

// Citations within the horizon, first-author self-citations excluded
// (per `options`).
std::size_t cp(const CitationGraph& graph, const Corpus& corpus, PaperId p,
               const ImpactOptions& options = {});

// Two-year impact factor derived from the corpus itself: citations made in
// `year` to the venue's papers from year-1 and year-2, over the number of
// those papers.
class JifTable {
 public:
  JifTable(const CitationGraph& graph, const Corpus& corpus);

  std::optional<double> operator()(const std::string& venue, int year) const;

 private:
  const CitationGraph* graph_;
  const Corpus* corpus_;
  std::map<std::string, std::map<int, std::vector<PaperIndex>>, std::less<>> venues_;
};

std::optional<double> jif(const Corpus& corpus, const CitationGraph& graph, const std::string& venue,
                          int year);

struct PaperImpact {
  PaperIndex paper = 0;
  std::size_t cp = 0;
  std::size_t ranking_key = 0;
  std::optional<double> jif;  // of the paper's venue in its publication year
  bool top_cited = false;
};

class ImpactScores {
 public:
  ImpactScores(std::vector<PaperImpact> rows, ImpactOptions options);

  const std::vector<PaperImpact>& rows() const { return rows_; }
  const ImpactOptions& options() const { return options_; }
  const PaperImpact* find(PaperIndex p) const;
  std::size_t top_count() const { return top_count_; }
  std::size_t top_threshold() const { return top_threshold_; }

 private:
  std::vector<PaperImpact> rows_;  // ascending paper
  ImpactOptions options_;
  std::size_t top_count_ = 0;
  std::size_t top_threshold_ = 0;
};

// Papers ranked by key descending; the first ceil(fraction*N) papers and
// every paper tied with the last of them form the top set.
std::vector<bool> mark_top(std::span<const std::size_t> keys, double fraction);

ImpactScores compute_impact(const CitationGraph& graph, const CorpusView& population,
                            const ImpactOptions& options = {});

enum class ShareMode {
  kShareOfTop,  // |top ∩ field| / |top|
  kHitRate,     // |top ∩ field| / |field|
};

struct ShareResult {
  std::optional<double> fraction;
  std::size_t numerator = 0;
  std::size_t denominator = 0;
};

// Throws Error(kEmptyInput) when no scored paper lies in the window.
ShareResult top_cited_share(const ImpactScores& scores, const Corpus& corpus, FieldIndex field,
                            TimeWindow window, ShareMode mode = ShareMode::kShareOfTop);

struct ImpactBucket {
  std::size_t index = 0;  // 1-based
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
  std::optional<double> mean_cp;
  std::optional<double> mean_jif;
  std::optional<double> top_cited_share;
};

struct BucketAnalysis {
  std::vector<ImpactBucket> buckets;
  std::vector<std::size_t> assignment;  // 0-based bucket per input value
  bool degenerate = false;
};

// Equal-width bucket of `v` over [lo, hi]: left-closed, the last bucket is
// closed on the right. Values within rounding distance of an interior
// boundary are assigned as if exactly on it.
std::size_t bucket_of(double v, double lo, double hi, std::size_t n_buckets);

// Throws Error(kEmptyInput) when `values` is empty.
BucketAnalysis bucket_impact(std::span<const PaperValue> values, const ImpactScores& scores,
                             std::size_t n_buckets = 5);

// bucket_index,bucket_lo,bucket_hi,count,mean_cp,mean_jif,top_cited_share
MetricReport bucket_report(const BucketAnalysis& analysis);
// paper_id,year,venue,cp,jif,top_cited
MetricReport impact_report(const ImpactScores& scores, const Corpus& corpus);

}  // namespace citeflow
