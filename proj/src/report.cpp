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

#include "citeflow/report.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

#include "citeflow/error.hpp"
#include "citeflow/text.hpp"

namespace citeflow {

MetricReport::MetricReport(std::string name, std::vector<std::string> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {}

void MetricReport::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "report '" + name_ + "': row has " + std::to_string(row.size()) +
                                                 " cells, expected " + std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

void MetricReport::set_meta(const std::string& key, std::string value) {
  for (auto& [k, v] : metadata_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  metadata_.emplace_back(key, std::move(value));
}

std::optional<std::string> MetricReport::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::size_t MetricReport::column_index(const std::string& column) const {
  const auto it = std::find(columns_.begin(), columns_.end(), column);
  if (it == columns_.end()) throw Error(ErrorCode::kInvalidArgument, "report '" + name_ + "' has no column " + column);
  return static_cast<std::size_t>(it - columns_.begin());
}

const Cell& MetricReport::at(std::size_t row, const std::string& column) const {
  return rows_.at(row).at(column_index(column));
}

std::string format_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return text::format_double(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

namespace {

void write_field(std::ostream& out, const std::string& s) {
  const bool quote = s.find_first_of(",\"\r\n") != std::string::npos || (!s.empty() && s.front() == '#');
  if (!quote) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

std::string single_line(const std::string& s) {
  std::string out = s;
  std::replace(out.begin(), out.end(), '\n', ' ');
  std::replace(out.begin(), out.end(), '\r', ' ');
  return out;
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

void write_csv(std::ostream& out, const MetricReport& report, bool with_metadata) {
  if (with_metadata) {
    out << "# report=" << single_line(report.name()) << '\n';
    for (const auto& [k, v] : report.metadata()) out << "# " << single_line(k) << '=' << single_line(v) << '\n';
  }
  for (std::size_t i = 0; i < report.columns().size(); ++i) {
    if (i) out << ',';
    write_field(out, report.columns()[i]);
  }
  out << '\n';
  for (const auto& row : report.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      write_field(out, format_cell(row[i]));
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, std::span<const MetricReport> reports) {
  nlohmann::ordered_json doc;
  doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["name"] = r.name();
    j["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.metadata()) j["metadata"][k] = v;
    j["columns"] = r.columns();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows()) {
      auto jr = nlohmann::ordered_json::array();
      for (const auto& c : row) jr.push_back(cell_json(c));
      rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    doc["reports"].push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace citeflow
