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

#include "citeflow/graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "citeflow/text.hpp"

namespace citeflow {

const char* to_string(Multiplicity m) noexcept { return m == Multiplicity::kFull ? "full" : "fractional"; }

void add_reference_weight(std::span<double> row, FieldSet cited, Multiplicity m) {
  const double w = m == Multiplicity::kFull ? 1.0 : 1.0 / static_cast<double>(cited.size());
  for (FieldIndex j : cited.indices()) row[j] += w;
}

CitationGraph CitationGraph::build(const Corpus& corpus, Multiplicity multiplicity) {
  CitationGraph g;
  g.multiplicity_ = multiplicity;
  const std::size_t n = corpus.size();
  g.out_offsets_.reserve(n + 1);
  g.out_offsets_.push_back(0);
  g.unresolved_.assign(n, 0);
  std::vector<std::uint32_t> in_degree(n, 0);

  for (PaperIndex p = 0; p < n; ++p) {
    const auto begin = g.out_targets_.size();
    for (PaperId ref : corpus.record(p).references) {
      if (auto q = corpus.find(ref)) {
        g.out_targets_.push_back(*q);
        ++in_degree[*q];
      } else {
        ++g.unresolved_[p];
      }
    }
    std::sort(g.out_targets_.begin() + static_cast<std::ptrdiff_t>(begin), g.out_targets_.end());
    g.out_offsets_.push_back(static_cast<std::uint32_t>(g.out_targets_.size()));
  }

  g.in_offsets_.assign(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) g.in_offsets_[p + 1] = g.in_offsets_[p] + in_degree[p];
  g.in_sources_.resize(g.out_targets_.size());
  std::vector<std::uint32_t> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  // Sources are visited in ascending order, so each in-list comes out sorted.
  for (PaperIndex p = 0; p < n; ++p) {
    for (PaperIndex q : g.references(p)) g.in_sources_[cursor[q]++] = p;
  }

  g.field_flow_ = citeflow::field_flow(g, corpus.full_view());
  return g;
}

std::size_t CitationGraph::total_unresolved() const {
  return std::accumulate(unresolved_.begin(), unresolved_.end(), std::size_t{0});
}

FieldRefCounts field_ref_counts(const CitationGraph& graph, const Corpus& corpus, PaperIndex p) {
  FieldRefCounts out;
  out.per_field.assign(corpus.taxonomy().size(), 0.0);
  const auto refs = graph.references(p);
  for (PaperIndex q : refs) add_reference_weight(out.per_field, corpus.record(q).fields, graph.multiplicity());
  out.total = refs.size();
  return out;
}

FieldRefCounts per_paper_field_refs(const CitationGraph& graph, const Corpus& corpus, PaperId p) {
  return field_ref_counts(graph, corpus, corpus.index_of(p));
}

FieldMatrix field_flow(const CitationGraph& graph, const CorpusView& view) {
  const Corpus& corpus = view.corpus();
  FieldMatrix flow(corpus.taxonomy().size());
  for (PaperIndex p : view.papers()) {
    const auto citing = corpus.record(p).fields.indices();
    for (PaperIndex q : graph.references(p)) {
      for (FieldIndex i : citing) add_reference_weight(flow.row(i), corpus.record(q).fields, graph.multiplicity());
    }
  }
  return flow;
}

bool same_first_author(const PaperRecord& a, const PaperRecord& b) {
  if (a.authors.empty() || b.authors.empty()) return false;
  return text::iequals(text::trim(a.authors.front()), text::trim(b.authors.front()));
}

namespace {

bool accepted(const Corpus& corpus, const PaperRecord& cited, PaperIndex q, const CitationFilter& filter) {
  const auto& citing = corpus.record(q);
  if (filter.horizon_years) {
    const int delta = citing.year - cited.year;
    if (delta < 0 || delta > *filter.horizon_years - 1) return false;
  }
  return !(filter.exclude_first_author_self && same_first_author(citing, cited));
}

}  // namespace

std::vector<PaperIndex> citing_papers(const CitationGraph& graph, const Corpus& corpus, PaperIndex p,
                                      const CitationFilter& filter) {
  std::vector<PaperIndex> out;
  const auto& cited = corpus.record(p);
  for (PaperIndex q : graph.citations(p)) {
    if (accepted(corpus, cited, q, filter)) out.push_back(q);
  }
  return out;
}

std::size_t count_citing(const CitationGraph& graph, const Corpus& corpus, PaperIndex p,
                         const CitationFilter& filter) {
  std::size_t n = 0;
  const auto& cited = corpus.record(p);
  for (PaperIndex q : graph.citations(p)) n += accepted(corpus, cited, q, filter) ? 1 : 0;
  return n;
}

std::vector<PaperId> citations_received(const CitationGraph& graph, const Corpus& corpus, PaperId p,
                                        const CitationFilter& filter) {
  std::vector<PaperId> out;
  for (PaperIndex q : citing_papers(graph, corpus, corpus.index_of(p), filter)) out.push_back(corpus.record(q).id);
  return out;
}

void write_edge_list(std::ostream& out, const CitationGraph& graph, const Corpus& corpus) {
  out << "citing_id,cited_id\n";
  for (PaperIndex p = 0; p < corpus.size(); ++p) {
    for (PaperIndex q : graph.references(p)) out << corpus.record(p).id << ',' << corpus.record(q).id << '\n';
  }
}

MetricReport field_flow_report(const FieldMatrix& flow, const FieldTaxonomy& taxonomy, const std::string& name) {
  std::vector<std::string> columns{"field_abbr"};
  for (FieldIndex j = 0; j < flow.n; ++j) columns.push_back(taxonomy.abbreviation(j));
  MetricReport report(name, std::move(columns));
  for (FieldIndex i = 0; i < flow.n; ++i) {
    std::vector<Cell> row{cell(taxonomy.abbreviation(i))};
    for (FieldIndex j = 0; j < flow.n; ++j) row.push_back(cell(flow(i, j)));
    report.add_row(std::move(row));
  }
  return report;
}

}  // namespace citeflow
