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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "citeflow/corpus.hpp"
#include "citeflow/graph.hpp"
#include "citeflow/report.hpp"

namespace citeflow {

using Series = std::vector<std::optional<double>>;

enum class TauMode {
  kPooled,     // Σ cross / Σ same over the year's papers
  kPaperMean,  // mean of per-paper ratios over papers with same > 0
};
enum class ZetaIndex { kCitingYear, kCitedYear };
enum class PartnerDirection { kReferred, kCiting };

const char* to_string(TauMode m) noexcept;
const char* to_string(ZetaIndex z) noexcept;
const char* to_string(PartnerDirection d) noexcept;

// A reference is same-field when the cited paper shares at least one field
// with the citing paper.
struct ReferenceSplit {
  std::size_t cross = 0;
  std::size_t same = 0;
};

ReferenceSplit split_references(const CitationGraph& graph, const Corpus& corpus, PaperIndex p);

// Cross-field over same-field references of the field's papers, per
// publication year; missing when the denominator is 0.
Series tau_series(const CitationGraph& graph, const Corpus& corpus, FieldIndex field,
                  std::span<const int> years, TauMode mode = TauMode::kPooled);

// Citations into the field's papers from papers outside the field over
// those from inside it, per year of the citing (or cited) paper.
Series zeta_series(const CitationGraph& graph, const Corpus& corpus, FieldIndex field,
                   std::span<const int> years, ZetaIndex index = ZetaIndex::kCitingYear);

struct PartnerField {
  FieldIndex field = 0;
  double volume = 0.0;
};

// Up to k fields other than `field` ranked by reference (or citation)
// volume, descending, ties by field index. The window selects the citing
// paper's year in both directions.
std::vector<PartnerField> top_partner_fields(const CitationGraph& graph, const Corpus& corpus,
                                             FieldIndex field, TimeWindow window,
                                             PartnerDirection direction, std::size_t k = 5);

struct CotagPoint {
  TimeWindow window;
  std::size_t cotagged = 0;        // tagged with both A and B
  std::size_t multi_tagged_a = 0;  // tagged with A and at least one more
  double probability = 0.0;        // P(B | multi-tagged A paper)
  std::optional<double> pct_change;  // cotagged vs previous window, percent
};

std::vector<CotagPoint> cotag_series(const Corpus& corpus, FieldIndex a, FieldIndex b,
                                     std::span<const TimeWindow> windows);

struct EvidenceRow {
  int year = 0;
  std::size_t papers = 0;
  std::optional<double> multi_field_fraction;
  std::optional<double> mean_fields_cited;
  std::optional<double> tau;
  std::optional<double> mean_team_size;
  std::optional<double> mean_author_fields;
};

// An author's expertise in year y is the set of fields of all their papers
// published up to and including y.
std::vector<EvidenceRow> evidence_series(const CitationGraph& graph, const Corpus& corpus,
                                         std::span<const int> years);

enum class Phase { kGrowing, kMatured, kInterdisciplinary };

const char* to_string(Phase p) noexcept;

struct PhaseSpan {
  Phase label = Phase::kMatured;
  int start = 0;
  int end = 0;
  double segment_mean = 0.0;
};

struct SegmentFit {
  std::size_t split = 0;  // index of the first value of the second segment
  double mean_before = 0.0;
  double mean_after = 0.0;
  double sse = 0.0;
};

// Least-squares two-segment piecewise-constant fit; the earliest split wins
// ties. Empty when the series is shorter than 2 * min_segment.
std::optional<SegmentFit> fit_two_segments(std::span<const double> values, std::size_t min_segment);

struct PhaseParams {
  std::size_t min_years = 10;
  std::size_t min_segment = 2;
  // A level shift counts only when |after - before| exceeds this fraction
  // of the larger segment level.
  double min_relative_shift = 0.1;
};

struct FieldTrajectory {
  FieldIndex field = 0;
  std::vector<int> years;
  Series tau;
  Series zeta;
  std::vector<std::pair<TimeWindow, std::vector<PartnerField>>> top_referred;
  std::vector<std::pair<TimeWindow, std::vector<PartnerField>>> top_citing;
  std::vector<PhaseSpan> phases;
};

struct PhaseLabeling {
  std::vector<PhaseSpan> phases;
  std::optional<int> tau_change_year;   // first year of the lower τ level
  std::optional<int> zeta_change_year;  // first year of the higher ζ level
  std::vector<std::string> diagnostics;
};

// growing = up to the τ drop, matured = until the ζ rise, interdisciplinary
// = from the ζ rise on (only when it follows the τ drop). Throws
// Error(kInvalidArgument) with fewer than min_years defined τ values.
PhaseLabeling detect_phases(const FieldTrajectory& trajectory, const PhaseParams& params = {});

struct TrajectoryOptions {
  TauMode tau_mode = TauMode::kPooled;
  ZetaIndex zeta_index = ZetaIndex::kCitingYear;
  std::size_t partner_count = 5;
};

FieldTrajectory build_trajectory(const CitationGraph& graph, const Corpus& corpus, FieldIndex field,
                                 std::span<const int> years, std::span<const TimeWindow> periods,
                                 const TrajectoryOptions& options = {});

std::vector<int> year_range(int first, int last);

MetricReport trajectory_report(std::span<const FieldTrajectory> trajectories, const FieldTaxonomy& taxonomy);
MetricReport phases_report(std::span<const std::pair<FieldIndex, PhaseLabeling>> labelings,
                           const FieldTaxonomy& taxonomy);
MetricReport partners_report(std::span<const FieldTrajectory> trajectories, const FieldTaxonomy& taxonomy);
MetricReport cotag_report(std::span<const CotagPoint> points, const FieldTaxonomy& taxonomy, FieldIndex a,
                          FieldIndex b);
MetricReport evidence_report(std::span<const EvidenceRow> rows);

}  // namespace citeflow
