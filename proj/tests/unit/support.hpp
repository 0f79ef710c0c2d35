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

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "citeflow/corpus.hpp"
#include "citeflow/graph.hpp"

namespace citeflow::testing {

inline std::shared_ptr<const FieldTaxonomy> abc_taxonomy() {
  static const auto taxonomy = std::make_shared<const FieldTaxonomy>(
      std::vector<FieldEntry>{{"Alpha", "A"}, {"Beta", "B"}, {"Gamma", "C"}, {"Delta", "D"}});
  return taxonomy;
}

inline constexpr FieldIndex kA = 0;
inline constexpr FieldIndex kB = 1;
inline constexpr FieldIndex kC = 2;
inline constexpr FieldIndex kD = 3;

// Fluent record construction for hand-built fixtures.
class Paper {
 public:
  explicit Paper(PaperId id) { r_.id = id; r_.year = 2000; r_.title = "p" + std::to_string(id); }
  Paper& year(int y) { r_.year = y; return *this; }
  Paper& fields(std::initializer_list<FieldIndex> fs) {
    for (auto f : fs) r_.fields.insert(f);
    return *this;
  }
  Paper& refs(std::initializer_list<PaperId> ids) {
    r_.references.insert(r_.references.end(), ids);
    return *this;
  }
  Paper& authors(std::initializer_list<const char*> names) {
    for (const char* n : names) r_.authors.emplace_back(n);
    return *this;
  }
  Paper& keywords(std::initializer_list<const char*> ks) {
    for (const char* k : ks) r_.keywords.emplace_back(k);
    return *this;
  }
  Paper& venue(std::string v) { r_.venue = std::move(v); return *this; }
  operator PaperRecord() const { return r_; }

 private:
  PaperRecord r_;
};

inline Corpus make_corpus(std::vector<PaperRecord> records,
                          std::shared_ptr<const FieldTaxonomy> taxonomy = abc_taxonomy()) {
  return Corpus(std::move(taxonomy), std::move(records));
}

}  // namespace citeflow::testing
