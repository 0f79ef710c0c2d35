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

#include "citeflow/taxonomy.hpp"

#include <fstream>

#include "citeflow/error.hpp"
#include "citeflow/text.hpp"

namespace citeflow {

const char* to_string(VenueKind kind) noexcept {
  switch (kind) {
    case VenueKind::kJournal: return "journal";
    case VenueKind::kConference: return "conference";
    case VenueKind::kUnknown: break;
  }
  return "unknown";
}

FieldTaxonomy::FieldTaxonomy(std::vector<FieldEntry> entries) : entries_(std::move(entries)) {
  if (entries_.size() > kMaxFields) {
    throw Error(ErrorCode::kInvalidArgument,
                "taxonomy has " + std::to_string(entries_.size()) + " fields, at most " +
                    std::to_string(kMaxFields) + " are supported");
  }
  for (FieldIndex i = 0; i < entries_.size(); ++i) {
    auto& e = entries_[i];
    e.name = std::string(text::trim(e.name));
    e.abbreviation = std::string(text::trim(e.abbreviation));
    if (e.name.empty() || e.abbreviation.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "taxonomy entry " + std::to_string(i + 1) + " is incomplete");
    }
    for (const auto& label : {e.name, e.abbreviation}) {
      auto [it, inserted] = lookup_.emplace(text::fold_case(label), i);
      if (!inserted && it->second != i) {
        throw Error(ErrorCode::kInvalidArgument, "duplicate taxonomy label '" + label + "'");
      }
    }
  }
}

std::shared_ptr<const FieldTaxonomy> FieldTaxonomy::default_taxonomy() {
  static const auto instance = std::make_shared<const FieldTaxonomy>(std::vector<FieldEntry>{
      {"Artificial Intelligence", "AI"},
      {"Algorithm", "ALGO"},
      {"Networking", "NETW"},
      {"Databases", "DB"},
      {"Distributed Systems", "DIST"},
      {"Computer Architecture", "ARC"},
      {"Software Engineering", "SE"},
      {"Machine Learning", "ML"},
      {"Scientific Computing", "SC"},
      {"Bioinformatics", "BIO"},
      {"Human Computer Interaction", "HCI"},
      {"Multimedia", "MUL"},
      {"Graphics", "GRP"},
      {"Computer Vision", "CV"},
      {"Data Mining", "DM"},
      {"Programming Language", "PL"},
      {"Security and Privacy", "SEC"},
      {"Information Retrieval", "IR"},
      {"Natural Language Processing", "NLP"},
      {"World Wide Web", "WWW"},
      {"Education", "EDU"},
      {"Operating Systems", "OS"},
      {"Real Time Systems", "RT"},
      {"Simulation", "SIM"},
  });
  return instance;
}

FieldTaxonomy FieldTaxonomy::load(std::istream& in) {
  std::vector<FieldEntry> entries;
  std::vector<std::pair<std::string, VenueKind>> venues;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<std::string> cols;
    std::string_view rest = body;
    while (true) {
      const auto tab = rest.find('\t');
      cols.emplace_back(text::trim(rest.substr(0, tab)));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (cols[0] == "!venue") {
      if (cols.size() != 3) {
        throw Error(ErrorCode::kParse, "taxonomy line " + std::to_string(line_no) + ": expected !venue<TAB>NAME<TAB>KIND");
      }
      VenueKind kind;
      if (text::iequals(cols[2], "journal")) {
        kind = VenueKind::kJournal;
      } else if (text::iequals(cols[2], "conference")) {
        kind = VenueKind::kConference;
      } else {
        throw Error(ErrorCode::kParse, "taxonomy line " + std::to_string(line_no) + ": unknown venue kind '" + cols[2] + "'");
      }
      venues.emplace_back(cols[1], kind);
      continue;
    }
    if (cols.size() != 2) {
      throw Error(ErrorCode::kParse, "taxonomy line " + std::to_string(line_no) + ": expected Full Name<TAB>ABBR");
    }
    entries.push_back({cols[0], cols[1]});
  }
  FieldTaxonomy t(std::move(entries));
  for (auto& [venue, kind] : venues) t.set_venue_kind(std::move(venue), kind);
  return t;
}

FieldTaxonomy FieldTaxonomy::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open taxonomy file '" + path + "'");
  return load(in);
}

std::optional<FieldIndex> FieldTaxonomy::find(std::string_view label) const {
  const auto it = lookup_.find(text::fold_case(text::trim(label)));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

FieldIndex FieldTaxonomy::require(std::string_view label) const {
  if (auto f = find(label)) return *f;
  throw Error(ErrorCode::kUnknownField, "unknown field '" + std::string(label) + "'");
}

FieldSet FieldTaxonomy::all() const {
  FieldSet s;
  for (FieldIndex i = 0; i < entries_.size(); ++i) s.insert(i);
  return s;
}

VenueKind FieldTaxonomy::venue_kind(std::string_view venue) const {
  const auto it = venue_kinds_.find(venue);
  return it == venue_kinds_.end() ? VenueKind::kUnknown : it->second;
}

void FieldTaxonomy::set_venue_kind(std::string venue, VenueKind kind) { venue_kinds_[std::move(venue)] = kind; }

}  // namespace citeflow
