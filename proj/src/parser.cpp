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

#include "citeflow/parser.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "citeflow/text.hpp"

namespace citeflow {

const char* to_string(Severity s) noexcept { return s == Severity::kError ? "error" : "warning"; }

std::size_t ParseReport::count(Severity s) const {
  return static_cast<std::size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(), [s](const Diagnostic& d) { return d.severity == s; }));
}

ParseError::ParseError(Diagnostic d)
    : Error(ErrorCode::kParse, "line " + std::to_string(d.line) + " (record " + std::to_string(d.record) + "): " +
                                   d.code + ": " + d.message),
      diagnostic_(std::move(d)) {}

namespace {

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  s = text::trim(s);
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct PendingRef {
  PaperId id;
  std::size_t line;
};

class RecordParser {
 public:
  RecordParser(const FieldTaxonomy& taxonomy, const ParseOptions& options, ParseReport& report)
      : taxonomy_(taxonomy), options_(options), report_(report) {}

  void line(std::string_view text, std::size_t line_no) {
    if (text::trim(text).empty()) {
      finish();
      return;
    }
    if (text.starts_with("##")) return;
    if (!open_) start(line_no);

    if (text.starts_with("#index")) {
      on_index(text.substr(6), line_no);
      return;
    }
    if (text.size() < 2 || text[0] != '#') {
      diagnose(line_no, Severity::kError, "unknown-line", "line does not start with a record tag; ignored");
      return;
    }
    const std::string_view value = text.substr(2);
    switch (text[1]) {
      case '*': set_once(title_seen_, line_no, "#*", [&] { rec_.title = text::trim(value); }); break;
      case '@':
        set_once(authors_seen_, line_no, "#@", [&] { on_authors(value, line_no); });
        break;
      case 't': on_year(value, line_no); break;
      case 'c': set_once(venue_seen_, line_no, "#c", [&] { rec_.venue = text::trim(value); }); break;
      case 'f': on_fields(value, line_no); break;
      case 'k':
        for (auto& k : text::split_trimmed(value, ',')) {
          auto n = text::normalize_keyword(k);
          if (!n.empty()) rec_.keywords.push_back(std::move(n));
        }
        break;
      case '%': on_reference(value, line_no); break;
      case '!':
        set_once(abstract_seen_, line_no, "#!", [&] {
          if (options_.keep_abstracts) rec_.abstract = text::trim(value);
        });
        break;
      default: diagnose(line_no, Severity::kError, "unknown-line", "unknown tag; line ignored"); break;
    }
  }

  void finish() {
    if (!open_) return;
    open_ = false;
    ++report_.blocks;
    if (!failed_ && !index_seen_) fail(first_line_, "missing-index", "record has no #index line");
    if (!failed_ && !year_seen_) fail(first_line_, "missing-year", "record has no #t line");
    if (!failed_ && !fields_seen_) fail(first_line_, "missing-field", "record has no #f line");
    if (!failed_ && rec_.fields.empty()) fail(first_line_, "no-valid-field", "no #f label is in the taxonomy");
    if (!failed_ && seen_ids_.count(rec_.id) != 0) {
      fail(index_line_, "duplicate-id", "id " + std::to_string(rec_.id) + " already used by an earlier record");
    }
    if (failed_) {
      ++report_.records_skipped;
      return;
    }
    std::unordered_set<PaperId> refs;
    for (const auto& r : pending_refs_) {
      if (r.id == rec_.id) {
        diagnose(r.line, Severity::kWarning, "self-reference", "reference to the record itself dropped");
      } else if (!refs.insert(r.id).second) {
        diagnose(r.line, Severity::kWarning, "duplicate-reference",
                 "reference " + std::to_string(r.id) + " repeated; deduplicated");
      } else {
        rec_.references.push_back(r.id);
      }
    }
    std::sort(rec_.keywords.begin(), rec_.keywords.end());
    rec_.keywords.erase(std::unique(rec_.keywords.begin(), rec_.keywords.end()), rec_.keywords.end());
    seen_ids_.insert(rec_.id);
    records_.push_back(std::move(rec_));
    ++report_.records_parsed;
  }

  std::vector<PaperRecord> take() { return std::move(records_); }

 private:
  void start(std::size_t line_no) {
    open_ = true;
    ++ordinal_;
    first_line_ = line_no;
    rec_ = PaperRecord{};
    pending_refs_.clear();
    failed_ = title_seen_ = authors_seen_ = venue_seen_ = abstract_seen_ = false;
    index_seen_ = year_seen_ = fields_seen_ = false;
    index_line_ = 0;
  }

  void diagnose(std::size_t line_no, Severity severity, std::string code, std::string message) {
    Diagnostic d{line_no, ordinal_, severity, std::move(code), std::move(message)};
    if (severity == Severity::kError && options_.strictness == Strictness::kStrict) throw ParseError(std::move(d));
    report_.diagnostics.push_back(std::move(d));
  }

  void fail(std::size_t line_no, std::string code, std::string message) {
    if (failed_) return;
    diagnose(line_no, Severity::kError, std::move(code), std::move(message) + "; record skipped");
    failed_ = true;
  }

  template <typename Fn>
  void set_once(bool& seen, std::size_t line_no, const char* tag, Fn&& apply) {
    if (seen) {
      diagnose(line_no, Severity::kWarning, "duplicate-tag", std::string("repeated ") + tag + " line ignored");
      return;
    }
    seen = true;
    apply();
  }

  void on_index(std::string_view value, std::size_t line_no) {
    const auto id = parse_number<PaperId>(value);
    if (!id) {
      fail(line_no, "bad-index", "malformed #index '" + std::string(text::trim(value)) + "'");
      return;
    }
    if (index_seen_ && rec_.id != *id) {
      fail(line_no, "duplicate-tag", "conflicting #index lines");
      return;
    }
    index_seen_ = true;
    index_line_ = line_no;
    rec_.id = *id;
  }

  void on_year(std::string_view value, std::size_t line_no) {
    const auto year = parse_number<int>(value);
    if (!year) {
      fail(line_no, "bad-year", "malformed #t '" + std::string(text::trim(value)) + "'");
      return;
    }
    if (*year < options_.min_year || *year > options_.max_year) {
      fail(line_no, "year-range",
           "year " + std::to_string(*year) + " outside " + std::to_string(options_.min_year) + "-" +
               std::to_string(options_.max_year));
      return;
    }
    if (year_seen_ && rec_.year != *year) {
      fail(line_no, "duplicate-tag", "conflicting #t lines");
      return;
    }
    year_seen_ = true;
    rec_.year = *year;
  }

  void on_authors(std::string_view value, std::size_t line_no) {
    std::size_t dropped = 0;
    std::string_view rest = value;
    while (true) {
      const auto comma = rest.find(',');
      const auto name = text::trim(rest.substr(0, comma));
      if (name.empty()) {
        ++dropped;
      } else {
        rec_.authors.emplace_back(name);
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    // A bare "#@" is an empty author list, not an empty name.
    if (dropped > 0 && !(dropped == 1 && rec_.authors.empty() && text::trim(value).empty())) {
      diagnose(line_no, Severity::kWarning, "empty-author", "empty author name dropped");
    }
  }

  void on_fields(std::string_view value, std::size_t line_no) {
    fields_seen_ = true;
    for (const auto& label : text::split_trimmed(value, ',')) {
      if (auto f = taxonomy_.find(label)) {
        rec_.fields.insert(*f);
      } else {
        ++report_.fields_dropped;
        diagnose(line_no, Severity::kError, "unknown-field", "field '" + label + "' is not in the taxonomy; dropped");
      }
    }
  }

  void on_reference(std::string_view value, std::size_t line_no) {
    const auto id = parse_number<PaperId>(value);
    if (!id) {
      diagnose(line_no, Severity::kError, "bad-reference",
               "malformed #% '" + std::string(text::trim(value)) + "'; reference dropped");
      return;
    }
    pending_refs_.push_back({*id, line_no});
  }

  const FieldTaxonomy& taxonomy_;
  const ParseOptions& options_;
  ParseReport& report_;
  std::vector<PaperRecord> records_;
  std::unordered_set<PaperId> seen_ids_;

  PaperRecord rec_;
  std::vector<PendingRef> pending_refs_;
  std::size_t ordinal_ = 0;
  std::size_t first_line_ = 0;
  std::size_t index_line_ = 0;
  bool open_ = false;
  bool failed_ = false;
  bool title_seen_ = false;
  bool authors_seen_ = false;
  bool venue_seen_ = false;
  bool abstract_seen_ = false;
  bool index_seen_ = false;
  bool year_seen_ = false;
  bool fields_seen_ = false;
};

}  // namespace

ParseResult parse_corpus(std::istream& in, std::shared_ptr<const FieldTaxonomy> taxonomy, const ParseOptions& options) {
  if (!taxonomy) taxonomy = FieldTaxonomy::default_taxonomy();
  ParseReport report;
  RecordParser parser(*taxonomy, options, report);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    parser.line(line, line_no);
  }
  parser.finish();
  if (in.bad()) throw Error(ErrorCode::kIo, "read error after line " + std::to_string(line_no));
  return ParseResult{Corpus(std::move(taxonomy), parser.take()), std::move(report)};
}

ParseResult parse_corpus_file(const std::string& path, std::shared_ptr<const FieldTaxonomy> taxonomy,
                              const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return parse_corpus(in, std::move(taxonomy), options);
}

void write_record(std::ostream& out, const PaperRecord& r, const FieldTaxonomy& taxonomy) {
  out << "#*" << r.title << '\n';
  out << "#@";
  for (std::size_t i = 0; i < r.authors.size(); ++i) out << (i ? "," : "") << r.authors[i];
  out << '\n';
  out << "#t" << r.year << '\n';
  if (!r.venue.empty()) out << "#c" << r.venue << '\n';
  for (FieldIndex f : r.fields.indices()) out << "#f" << taxonomy.name(f) << '\n';
  if (!r.keywords.empty()) {
    out << "#k";
    for (std::size_t i = 0; i < r.keywords.size(); ++i) out << (i ? ", " : "") << r.keywords[i];
    out << '\n';
  }
  out << "#index" << r.id << '\n';
  for (PaperId ref : r.references) out << "#%" << ref << '\n';
  if (!r.abstract.empty()) out << "#!" << r.abstract << '\n';
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  bool first = true;
  for (const auto& r : corpus.records()) {
    if (!first) out << '\n';
    first = false;
    write_record(out, r, corpus.taxonomy());
  }
}

std::string serialize(const Corpus& corpus) {
  std::ostringstream out;
  write_corpus(out, corpus);
  return out.str();
}

}  // namespace citeflow
