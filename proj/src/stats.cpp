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

#include "citeflow/stats.hpp"

#include <algorithm>

#include "citeflow/error.hpp"
#include "citeflow/text.hpp"

namespace citeflow {

CorpusStats compute_stats(const CorpusView& view) {
  if (view.empty()) throw Error(ErrorCode::kEmptyInput, "corpus_stats: no papers to report on");
  const Corpus& corpus = view.corpus();
  CorpusStats s;
  s.records = view.size();
  s.first_year = view.by_year().begin()->first;
  s.last_year = view.by_year().rbegin()->first;
  std::size_t refs = 0;
  std::size_t keywords = 0;
  for (PaperIndex p : view.papers()) {
    const auto& r = corpus.record(p);
    if (r.fields.size() > 1) ++s.multi_field;
    refs += r.references.size();
    keywords += r.keywords.size();
  }
  const auto n = static_cast<double>(s.records);
  s.multi_field_fraction = static_cast<double>(s.multi_field) / n;
  s.mean_references = static_cast<double>(refs) / n;
  s.mean_keywords = static_cast<double>(keywords) / n;
  s.field_papers.resize(corpus.taxonomy().size());
  for (FieldIndex f = 0; f < s.field_papers.size(); ++f) s.field_papers[f] = view.field_papers(f).size();
  return s;
}

MetricReport corpus_stats(const CorpusView& view) {
  const auto s = compute_stats(view);
  const auto& taxonomy = view.corpus().taxonomy();
  MetricReport report("stats", {"field_abbr", "field_name", "papers", "share"});
  for (FieldIndex f = 0; f < s.field_papers.size(); ++f) {
    report.add_row({cell(taxonomy.abbreviation(f)), cell(taxonomy.name(f)), cell(s.field_papers[f]),
                    cell(static_cast<double>(s.field_papers[f]) / static_cast<double>(s.records))});
  }
  report.set_meta("records", std::to_string(s.records));
  report.set_meta("multi_field_papers", std::to_string(s.multi_field));
  report.set_meta("multi_field_fraction", text::format_double(s.multi_field_fraction));
  report.set_meta("first_year", std::to_string(s.first_year));
  report.set_meta("last_year", std::to_string(s.last_year));
  report.set_meta("mean_references", text::format_double(s.mean_references));
  report.set_meta("mean_keywords", text::format_double(s.mean_keywords));
  return report;
}

}  // namespace citeflow
