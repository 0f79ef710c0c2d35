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
#include <map>
#include <vector>

#include "citeflow/corpus.hpp"
#include "citeflow/report.hpp"

namespace citeflow {

struct CorpusStats {
  std::size_t records = 0;
  std::size_t multi_field = 0;
  double multi_field_fraction = 0.0;
  int first_year = 0;
  int last_year = 0;
  double mean_references = 0.0;  // listed references, resolved or not
  double mean_keywords = 0.0;
  std::vector<std::size_t> field_papers;
};

// Throws Error(kEmptyInput) on an empty view.
CorpusStats compute_stats(const CorpusView& view);
// field_abbr,field_name,papers,share; corpus-wide totals go to metadata.
MetricReport corpus_stats(const CorpusView& view);

}  // namespace citeflow
