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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "citeflow/corpus.hpp"
#include "citeflow/graph.hpp"
#include "citeflow/report.hpp"

namespace citeflow {

struct FieldGroup {
  std::string name;
  FieldSet members;
};

// Data Science, Theoretical CS, Visualization, Computer Networks. Members
// missing from `taxonomy` are left out; groups left empty are dropped.
std::vector<FieldGroup> default_field_groups(const FieldTaxonomy& taxonomy);

// Row-normalized field flow. Rows without outflow are entirely missing.
struct FractionMatrix {
  std::size_t n = 0;
  std::vector<std::optional<double>> cells;

  const std::optional<double>& operator()(FieldIndex i, FieldIndex j) const { return cells[i * n + j]; }
};

FractionMatrix normalize_rows(const FieldMatrix& flow);
// Fractions of citations from field i to field j, over citing papers in
// `window`.
FractionMatrix citation_fraction_matrix(const CitationGraph& graph, const Corpus& corpus,
                                        TimeWindow window);

struct PearsonResult {
  std::optional<double> r;
  std::size_t points = 0;
  std::string diagnostic;  // set when r is undefined
};

// Two-pass Pearson correlation.
PearsonResult pearson(std::span<const double> x, std::span<const double> y);

// Correlation over the points (M[i][j], M[j][i]) for i, j in `group` (all
// fields when empty). Points with a missing coordinate are dropped.
PearsonResult reciprocity_pearson(const FractionMatrix& m, std::optional<FieldSet> group = std::nullopt,
                                  bool include_diagonal = true);

// Citations from papers tagged `source` (any year) into `targets`, divided
// by |targets|. Throws Error(kEmptyInput) on an empty target set.
double acp(const CitationGraph& graph, const Corpus& corpus, FieldIndex source,
           std::span<const PaperIndex> targets);

struct AcpBucketResult {
  std::size_t partitioned = 0;  // focal papers in the window with R_p >= 1
  std::vector<PaperIndex> bucket1;
  std::vector<PaperIndex> bucket2;
  double bucket1_pct = 0.0;
  double bucket2_pct = 0.0;
  std::optional<double> bucket1_acp;
  std::optional<double> bucket2_acp;
  // (acp1 - acp2) / acp2 * 100
  std::optional<double> difference_pct;
};

// Bucket-1 holds focal papers whose share of resolved references going to
// `target` is strictly above `threshold`; Bucket-2 the rest. Throws
// Error(kEmptyInput) when no focal paper in the window has references.
AcpBucketResult acp_bucket_test(const CitationGraph& graph, const Corpus& corpus, FieldIndex focal,
                                FieldIndex target, TimeWindow window, double threshold = 0.5);

MetricReport fraction_matrix_report(const FractionMatrix& m, const FieldTaxonomy& taxonomy);
// focal,target,bucket,size_pct,acp
MetricReport acp_report(const AcpBucketResult& result, const FieldTaxonomy& taxonomy, FieldIndex focal,
                        FieldIndex target);

}  // namespace citeflow
