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

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "citeflow/corpus.hpp"
#include "citeflow/error.hpp"

namespace citeflow {

enum class Strictness { kStrict, kLenient };
enum class Severity { kWarning, kError };

const char* to_string(Severity s) noexcept;

struct Diagnostic {
  std::size_t line = 0;    // 1-based line of the offending input
  std::size_t record = 0;  // 1-based ordinal of the blank-line block
  Severity severity = Severity::kWarning;
  std::string code;
  std::string message;
};

struct ParseReport {
  std::size_t blocks = 0;
  std::size_t records_parsed = 0;
  std::size_t records_skipped = 0;
  std::size_t fields_dropped = 0;
  std::vector<Diagnostic> diagnostics;

  std::size_t count(Severity s) const;
};

struct ParseOptions {
  Strictness strictness = Strictness::kLenient;
  int min_year = 1900;
  int max_year = 2100;
  // Abstracts dominate file size and no analysis reads them.
  bool keep_abstracts = true;
};

class ParseError : public Error {
 public:
  explicit ParseError(Diagnostic d);
  const Diagnostic& diagnostic() const { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

struct ParseResult {
  Corpus corpus;
  ParseReport report;
};

// Reads blank-line separated tagged records (#* #@ #t #c #f #k #index #% #!).
// Lines starting with `##` are comments. In strict mode the first
// error-severity diagnostic throws ParseError; in lenient mode the record is
// skipped, or the offending label dropped, and the diagnostic recorded.
ParseResult parse_corpus(std::istream& in, std::shared_ptr<const FieldTaxonomy> taxonomy,
                         const ParseOptions& options = {});
ParseResult parse_corpus_file(const std::string& path, std::shared_ptr<const FieldTaxonomy> taxonomy,
                              const ParseOptions& options = {});

// Canonical serialization: one #f line per field in index order, keywords
// in sorted order. Parsing the output reproduces the record exactly.
void write_record(std::ostream& out, const PaperRecord& record, const FieldTaxonomy& taxonomy);
void write_corpus(std::ostream& out, const Corpus& corpus);
std::string serialize(const Corpus& corpus);

}  // namespace citeflow
