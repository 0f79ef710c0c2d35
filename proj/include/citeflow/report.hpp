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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace citeflow {

// Empty cells (std::monostate) stand for undefined or missing values.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

inline Cell cell(std::optional<double> v) { return v ? Cell{*v} : Cell{}; }
inline Cell cell(double v) { return Cell{v}; }
inline Cell cell(std::int64_t v) { return Cell{v}; }
inline Cell cell(std::size_t v) { return Cell{static_cast<std::int64_t>(v)}; }
inline Cell cell(int v) { return Cell{static_cast<std::int64_t>(v)}; }
inline Cell cell(std::string v) { return Cell{std::move(v)}; }
inline Cell cell(const char* v) { return Cell{std::string(v)}; }

// One table of results plus ordered key/value provenance metadata.
class MetricReport {
 public:
  using Metadata = std::vector<std::pair<std::string, std::string>>;

  MetricReport() = default;
  MetricReport(std::string name, std::vector<std::string> columns);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  const Metadata& metadata() const { return metadata_; }

  // Throws Error(kInvalidArgument) on a width mismatch.
  void add_row(std::vector<Cell> row);
  // Replaces an existing key in place, otherwise appends.
  void set_meta(const std::string& key, std::string value);
  std::optional<std::string> meta(const std::string& key) const;

  std::size_t column_index(const std::string& column) const;
  const Cell& at(std::size_t row, const std::string& column) const;

 private:
  std::string name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  Metadata metadata_;
};

std::string format_cell(const Cell& c);

// Metadata is written as leading `# key=value` lines, then the header row.
void write_csv(std::ostream& out, const MetricReport& report, bool with_metadata = true);
// {"reports": [{"name", "metadata", "columns", "rows"}]}; missing cells are null.
void write_json(std::ostream& out, std::span<const MetricReport> reports);

}  // namespace citeflow
