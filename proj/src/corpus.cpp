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

#include "citeflow/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "citeflow/error.hpp"
#include "citeflow/text.hpp"

namespace citeflow {
namespace {

std::optional<int> parse_int(std::string_view s) {
  s = text::trim(s);
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

TimeWindow TimeWindow::make(int start_year, int end_year) {
  if (start_year > end_year) {
    throw Error(ErrorCode::kInvalidArgument,
                "window start " + std::to_string(start_year) + " is after end " + std::to_string(end_year));
  }
  return TimeWindow{start_year, end_year};
}

TimeWindow TimeWindow::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto a = parse_int(text.substr(0, colon));
  const auto b = colon == std::string_view::npos ? a : parse_int(text.substr(colon + 1));
  if (!a || !b) throw Error(ErrorCode::kInvalidArgument, "malformed window '" + std::string(text) + "', expected START:END");
  return make(*a, *b);
}

std::string TimeWindow::to_string() const { return std::to_string(start_year) + ":" + std::to_string(end_year); }

Corpus::Corpus() : Corpus(nullptr, {}) {}

Corpus::Corpus(std::shared_ptr<const FieldTaxonomy> taxonomy, std::vector<PaperRecord> records)
    : taxonomy_(taxonomy ? std::move(taxonomy) : FieldTaxonomy::default_taxonomy()), records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  if (records_.size() > std::numeric_limits<PaperIndex>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "too many records");
  }
  const FieldSet valid = taxonomy_->all();
  index_.reserve(records_.size());
  by_field_.assign(taxonomy_->size(), {});

  std::vector<std::string> all_keywords;
  for (PaperIndex i = 0; i < records_.size(); ++i) {
    auto& r = records_[i];
    const std::string where = "record " + std::to_string(r.id);
    if (!index_.emplace(r.id, i).second) throw Error(ErrorCode::kInvalidArgument, "duplicate id " + std::to_string(r.id));
    if (r.fields.empty()) throw Error(ErrorCode::kInvalidArgument, where + " has no field");
    if ((r.fields & valid) != r.fields) throw Error(ErrorCode::kUnknownField, where + " has a field outside the taxonomy");
    {
      std::unordered_set<PaperId> seen;
      for (PaperId ref : r.references) {
        if (ref == r.id) throw Error(ErrorCode::kInvalidArgument, where + " references itself");
        if (!seen.insert(ref).second) {
          throw Error(ErrorCode::kInvalidArgument, where + " references " + std::to_string(ref) + " twice");
        }
      }
    }
    for (auto& k : r.keywords) k = text::normalize_keyword(k);
    std::erase_if(r.keywords, [](const std::string& k) { return k.empty(); });
    std::sort(r.keywords.begin(), r.keywords.end());
    r.keywords.erase(std::unique(r.keywords.begin(), r.keywords.end()), r.keywords.end());
    all_keywords.insert(all_keywords.end(), r.keywords.begin(), r.keywords.end());

    for (FieldIndex f : r.fields.indices()) by_field_[f].push_back(i);
    by_year_[r.year].push_back(i);
  }

  std::sort(all_keywords.begin(), all_keywords.end());
  all_keywords.erase(std::unique(all_keywords.begin(), all_keywords.end()), all_keywords.end());
  keyword_names_ = std::move(all_keywords);
  keyword_offsets_.reserve(records_.size() + 1);
  keyword_offsets_.push_back(0);
  for (const auto& r : records_) {
    // Both lists are sorted, so ids come out sorted.
    auto it = keyword_names_.begin();
    for (const auto& k : r.keywords) {
      it = std::lower_bound(it, keyword_names_.end(), k);
      keyword_ids_.push_back(static_cast<KeywordId>(it - keyword_names_.begin()));
    }
    keyword_offsets_.push_back(static_cast<std::uint32_t>(keyword_ids_.size()));
  }
}

std::optional<PaperIndex> Corpus::find(PaperId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PaperIndex Corpus::index_of(PaperId id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorCode::kUnknownPaper, "unknown paper id " + std::to_string(id));
}

std::span<const KeywordId> Corpus::keyword_ids(PaperIndex i) const {
  return {keyword_ids_.data() + keyword_offsets_[i], keyword_offsets_[i + 1] - keyword_offsets_[i]};
}

CorpusView Corpus::view(TimeWindow window) const { return CorpusView(*this, window); }

CorpusView Corpus::full_view() const { return CorpusView(*this, TimeWindow::unbounded()); }

CorpusView::CorpusView(const Corpus& corpus, TimeWindow window)
    : corpus_(&corpus), window_(window), by_field_(corpus.taxonomy().size()) {
  const auto first = corpus.by_year().lower_bound(window.start_year);
  const auto last = corpus.by_year().upper_bound(window.end_year);
  for (auto it = first; it != last; ++it) {
    by_year_.emplace(it->first, it->second);
    papers_.insert(papers_.end(), it->second.begin(), it->second.end());
  }
  std::sort(papers_.begin(), papers_.end());
  for (PaperIndex p : papers_) {
    for (FieldIndex f : corpus.record(p).fields.indices()) by_field_[f].push_back(p);
  }
}

bool CorpusView::contains(PaperIndex i) const { return window_.contains(corpus_->record(i).year); }

}  // namespace citeflow
