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
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "citeflow/field_set.hpp"

namespace citeflow {

struct FieldEntry {
  std::string name;
  std::string abbreviation;
};

enum class VenueKind { kUnknown, kJournal, kConference };

const char* to_string(VenueKind kind) noexcept;

// Closed set of research fields. Lookup accepts either the full name or
// the abbreviation, case-insensitively, and maps both onto one index.
class FieldTaxonomy {
 public:
  FieldTaxonomy() = default;
  explicit FieldTaxonomy(std::vector<FieldEntry> entries);

  // The 24 computer-science fields of the MAS crawl.
  static std::shared_ptr<const FieldTaxonomy> default_taxonomy();

  // One `Full Name<TAB>ABBR` per line. Blank lines and lines starting with
  // `#` are skipped. A line `!venue<TAB>NAME<TAB>journal|conference`
  // annotates a venue's kind instead of declaring a field.
  static FieldTaxonomy load(std::istream& in);
  static FieldTaxonomy load_file(const std::string& path);

  std::size_t size() const { return entries_.size(); }
  const FieldEntry& entry(FieldIndex i) const { return entries_.at(i); }
  const std::vector<FieldEntry>& entries() const { return entries_; }
  const std::string& abbreviation(FieldIndex i) const { return entries_.at(i).abbreviation; }
  const std::string& name(FieldIndex i) const { return entries_.at(i).name; }

  std::optional<FieldIndex> find(std::string_view label) const;
  // Throws Error(kUnknownField) when absent.
  FieldIndex require(std::string_view label) const;

  FieldSet all() const;

  VenueKind venue_kind(std::string_view venue) const;
  void set_venue_kind(std::string venue, VenueKind kind);

 private:
  std::vector<FieldEntry> entries_;
  std::unordered_map<std::string, FieldIndex> lookup_;
  std::map<std::string, VenueKind, std::less<>> venue_kinds_;
};

}  // namespace citeflow
