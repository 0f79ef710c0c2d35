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

#include "citeflow/reciprocity.hpp"

#include <algorithm>
#include <cmath>

#include "citeflow/error.hpp"
#include "citeflow/kernels.hpp"
#include "citeflow/text.hpp"

namespace citeflow {

std::vector<FieldGroup> default_field_groups(const FieldTaxonomy& taxonomy) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> spec{
      {"Data Science", {"DB", "DM", "IR", "NLP", "ML"}},
      {"Theoretical CS", {"ALGO", "PL", "SE"}},
      {"Visualization", {"GRP", "CV", "HCI", "MUL"}},
      {"Computer Networks", {"NETW", "SEC", "DIST", "WWW"}},
  };
  std::vector<FieldGroup> groups;
  for (const auto& [name, members] : spec) {
    FieldGroup g{name, {}};
    for (const auto& abbr : members) {
      if (auto f = taxonomy.find(abbr)) g.members.insert(*f);
    }
    if (!g.members.empty()) groups.push_back(std::move(g));
  }
  return groups;
}

FractionMatrix normalize_rows(const FieldMatrix& flow) {
  FractionMatrix m;
  m.n = flow.n;
  m.cells.assign(flow.n * flow.n, std::nullopt);
  std::vector<double> row(flow.n);
  for (FieldIndex i = 0; i < flow.n; ++i) {
    const auto src = flow.row(i);
    const double total = kernels::sum(src);
    if (!(total > 0.0)) continue;
    std::copy(src.begin(), src.end(), row.begin());
    kernels::divide(row, total);
    for (FieldIndex j = 0; j < flow.n; ++j) m.cells[i * flow.n + j] = row[j];
  }
  return m;
}

FractionMatrix citation_fraction_matrix(const CitationGraph& graph, const Corpus& corpus, TimeWindow window) {
  return normalize_rows(field_flow(graph, corpus.view(window)));
}

PearsonResult pearson(std::span<const double> x, std::span<const double> y) {
  PearsonResult out;
  out.points = x.size();
  if (x.size() != y.size()) throw Error(ErrorCode::kInvalidArgument, "pearson: coordinate length mismatch");
  if (x.size() < 2) {
    out.diagnostic = "fewer than 2 usable points";
    return out;
  }
  const auto n = static_cast<double>(x.size());
  const double mean_x = kernels::sum(x) / n;
  const double mean_y = kernels::sum(y) / n;
  const auto m = kernels::centered_moments(x, y, mean_x, mean_y);
  if (!(m.xx > 0.0) || !(m.yy > 0.0)) {
    out.diagnostic = "zero variance in a coordinate";
    return out;
  }
  out.r = std::clamp(m.xy / std::sqrt(m.xx * m.yy), -1.0, 1.0);
  return out;
}

PearsonResult reciprocity_pearson(const FractionMatrix& m, std::optional<FieldSet> group, bool include_diagonal) {
  std::vector<FieldIndex> members;
  for (FieldIndex f = 0; f < m.n; ++f) {
    if (!group || group->contains(f)) members.push_back(f);
  }
  std::vector<double> x;
  std::vector<double> y;
  for (FieldIndex i : members) {
    for (FieldIndex j : members) {
      if (i == j && !include_diagonal) continue;
      const auto& a = m(i, j);
      const auto& b = m(j, i);
      if (!a || !b) continue;
      x.push_back(*a);
      y.push_back(*b);
    }
  }
  return pearson(x, y);
}

double acp(const CitationGraph& graph, const Corpus& corpus, FieldIndex source, std::span<const PaperIndex> targets) {
  if (targets.empty()) throw Error(ErrorCode::kEmptyInput, "acp: empty target set");
  std::size_t citations = 0;
  for (PaperIndex t : targets) {
    for (PaperIndex q : graph.citations(t)) citations += corpus.record(q).fields.contains(source) ? 1 : 0;
  }
  return static_cast<double>(citations) / static_cast<double>(targets.size());
}

AcpBucketResult acp_bucket_test(const CitationGraph& graph, const Corpus& corpus, FieldIndex focal, FieldIndex target,
                                TimeWindow window, double threshold) {
  AcpBucketResult out;
  for (PaperIndex p : corpus.field_papers(focal)) {
    if (!window.contains(corpus.record(p).year)) continue;
    const auto counts = field_ref_counts(graph, corpus, p);
    if (counts.total == 0) continue;
    const double share = counts.per_field[target] / static_cast<double>(counts.total);
    (share > threshold ? out.bucket1 : out.bucket2).push_back(p);
  }
  out.partitioned = out.bucket1.size() + out.bucket2.size();
  if (out.partitioned == 0) {
    throw Error(ErrorCode::kEmptyInput, "acp_bucket_test: no focal paper with resolved references in " + window.to_string());
  }
  const auto total = static_cast<double>(out.partitioned);
  out.bucket1_pct = 100.0 * static_cast<double>(out.bucket1.size()) / total;
  out.bucket2_pct = 100.0 * static_cast<double>(out.bucket2.size()) / total;
  if (!out.bucket1.empty()) out.bucket1_acp = acp(graph, corpus, target, out.bucket1);
  if (!out.bucket2.empty()) out.bucket2_acp = acp(graph, corpus, target, out.bucket2);
  if (out.bucket1_acp && out.bucket2_acp && *out.bucket2_acp > 0.0) {
    out.difference_pct = (*out.bucket1_acp - *out.bucket2_acp) / *out.bucket2_acp * 100.0;
  }
  return out;
}

MetricReport fraction_matrix_report(const FractionMatrix& m, const FieldTaxonomy& taxonomy) {
  std::vector<std::string> columns{"field_abbr"};
  for (FieldIndex j = 0; j < m.n; ++j) columns.push_back(taxonomy.abbreviation(j));
  MetricReport report("fraction_matrix", std::move(columns));
  for (FieldIndex i = 0; i < m.n; ++i) {
    std::vector<Cell> row{cell(taxonomy.abbreviation(i))};
    for (FieldIndex j = 0; j < m.n; ++j) row.push_back(cell(m(i, j)));
    report.add_row(std::move(row));
  }
  return report;
}

MetricReport acp_report(const AcpBucketResult& result, const FieldTaxonomy& taxonomy, FieldIndex focal,
                        FieldIndex target) {
  MetricReport report("acp", {"focal", "target", "bucket", "size_pct", "acp"});
  const auto& f = taxonomy.abbreviation(focal);
  const auto& t = taxonomy.abbreviation(target);
  report.add_row({cell(f), cell(t), cell(1), cell(result.bucket1_pct), cell(result.bucket1_acp)});
  report.add_row({cell(f), cell(t), cell(2), cell(result.bucket2_pct), cell(result.bucket2_acp)});
  report.set_meta("partitioned_papers", std::to_string(result.partitioned));
  report.set_meta("bucket1_papers", std::to_string(result.bucket1.size()));
  report.set_meta("bucket2_papers", std::to_string(result.bucket2.size()));
  report.set_meta("acp_difference_pct", result.difference_pct ? text::format_double(*result.difference_pct) : "");
  report.set_meta("citing_window", "all corpus years");
  return report;
}

}  // namespace citeflow
