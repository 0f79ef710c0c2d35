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
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "citeflow/record.hpp"
#include "citeflow/taxonomy.hpp"

namespace citeflow {

// Dense position of a record inside a Corpus. Records are stored in
// ascending id order, so ascending PaperIndex is ascending PaperId.
using PaperIndex = std::uint32_t;
using KeywordId = std::uint32_t;

class CorpusView;

// Validated, immutable collection of records.
class Corpus {
 public:
  Corpus();
  // Sorts by id and validates every record invariant; throws Error on the
  // first violation.
  Corpus(std::shared_ptr<const FieldTaxonomy> taxonomy, std::vector<PaperRecord> records);

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  const FieldTaxonomy& taxonomy() const { return *taxonomy_; }
  const std::shared_ptr<const FieldTaxonomy>& taxonomy_ptr() const { return taxonomy_; }

  std::span<const PaperRecord> records() const { return records_; }
  const PaperRecord& record(PaperIndex i) const { return records_[i]; }
  const PaperRecord& at(PaperId id) const { return records_[index_of(id)]; }

  std::optional<PaperIndex> find(PaperId id) const;
  // Throws Error(kUnknownPaper).
  PaperIndex index_of(PaperId id) const;

  // The set P_i: every paper tagged with the field, ascending.
  std::span<const PaperIndex> field_papers(FieldIndex f) const { return by_field_.at(f); }
  const std::map<int, std::vector<PaperIndex>>& by_year() const { return by_year_; }

  // Keywords interned corpus-wide; ids per paper are sorted.
  std::span<const KeywordId> keyword_ids(PaperIndex i) const;
  std::size_t keyword_count() const { return keyword_names_.size(); }
  const std::string& keyword(KeywordId k) const { return keyword_names_.at(k); }

  CorpusView view(TimeWindow window) const;
  CorpusView full_view() const;

 private:
  std::shared_ptr<const FieldTaxonomy> taxonomy_;
  std::vector<PaperRecord> records_;
  std::unordered_map<PaperId, PaperIndex> index_;
  std::vector<std::vector<PaperIndex>> by_field_;
  std::map<int, std::vector<PaperIndex>> by_year_;
  std::vector<std::uint32_t> keyword_offsets_;
  std::vector<KeywordId> keyword_ids_;
  std::vector<std::string> keyword_names_;
};

// Read-only window over a Corpus. Partitions cover only papers whose year
// lies in the window; reference resolution still sees the whole corpus.
class CorpusView {
 public:
  CorpusView(const Corpus& corpus, TimeWindow window);

  const Corpus& corpus() const { return *corpus_; }
  const TimeWindow& window() const { return window_; }

  std::size_t size() const { return papers_.size(); }
  bool empty() const { return papers_.empty(); }
  bool contains(PaperIndex i) const;

  std::span<const PaperIndex> papers() const { return papers_; }
  std::span<const PaperIndex> field_papers(FieldIndex f) const { return by_field_.at(f); }
  const std::map<int, std::vector<PaperIndex>>& by_year() const { return by_year_; }

 private:
  const Corpus* corpus_;
  TimeWindow window_;
  std::vector<PaperIndex> papers_;
  std::vector<std::vector<PaperIndex>> by_field_;
  std::map<int, std::vector<PaperIndex>> by_year_;
};

}  // namespace citeflow
