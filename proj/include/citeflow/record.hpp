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
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "citeflow/field_set.hpp"

namespace citeflow {

using PaperId = std::uint64_t;

// Inclusive year range.
struct TimeWindow {
  int start_year = std::numeric_limits<int>::min();
  int end_year = std::numeric_limits<int>::max();

  // Throws Error(kInvalidArgument) when start > end.
  static TimeWindow make(int start_year, int end_year);
  // `START:END`; a single `YEAR` is the one-year window.
  static TimeWindow parse(std::string_view text);
  static constexpr TimeWindow unbounded() { return {}; }

  constexpr bool contains(int year) const { return start_year <= year && year <= end_year; }
  std::string to_string() const;

  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

struct PaperRecord {
  PaperId id = 0;
  std::string title;
  std::vector<std::string> authors;
  int year = 0;
  std::string venue;
  FieldSet fields;
  // Normalized (see text::normalize_keyword), sorted, unique.
  std::vector<std::string> keywords;
  // Distinct ids in file order; never contains `id`.
  std::vector<PaperId> references;
  std::string abstract;

  friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

}  // namespace citeflow
