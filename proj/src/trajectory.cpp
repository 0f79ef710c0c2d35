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

#include "citeflow/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "citeflow/error.hpp"
#include "citeflow/kernels.hpp"

namespace citeflow {

const char* to_string(TauMode m) noexcept { return m == TauMode::kPooled ? "pooled" : "paper-mean"; }
const char* to_string(ZetaIndex z) noexcept { return z == ZetaIndex::kCitingYear ? "citing-year" : "cited-year"; }
const char* to_string(PartnerDirection d) noexcept { return d == PartnerDirection::kReferred ? "referred" : "citing"; }

const char* to_string(Phase p) noexcept {
  switch (p) {
    case Phase::kGrowing: return "growing";
    case Phase::kMatured: return "matured";
    case Phase::kInterdisciplinary: return "interdisciplinary";
  }
  return "unknown";
}

ReferenceSplit split_references(const CitationGraph& graph, const Corpus& corpus, PaperIndex p) {
  ReferenceSplit s;
  const FieldSet own = corpus.record(p).fields;
  for (PaperIndex q : graph.references(p)) {
    if (corpus.record(q).fields.intersects(own)) {
      ++s.same;
    } else {
      ++s.cross;
    }
  }
  return s;
}

namespace {

std::optional<double> ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::optional<double> mean(const std::vector<double>& values) {
  if (values.empty()) return std::nullopt;
  return kernels::sum(values) / static_cast<double>(values.size());
}

}  // namespace

Series tau_series(const CitationGraph& graph, const Corpus& corpus, FieldIndex field, std::span<const int> years,
                  TauMode mode) {
  std::map<int, ReferenceSplit> pooled;
  std::map<int, std::vector<double>> per_paper;
  for (PaperIndex p : corpus.field_papers(field)) {
    const int year = corpus.record(p).year;
    const auto s = split_references(graph, corpus, p);
    auto& acc = pooled[year];
    acc.cross += s.cross;
    acc.same += s.same;
    if (s.same > 0) per_paper[year].push_back(static_cast<double>(s.cross) / static_cast<double>(s.same));
  }
  Series out;
  out.reserve(years.size());
  for (int y : years) {
    if (mode == TauMode::kPooled) {
      const auto it = pooled.find(y);
      out.push_back(it == pooled.end() ? std::nullopt : ratio(it->second.cross, it->second.same));
    } else {
      const auto it = per_paper.find(y);
      out.push_back(it == per_paper.end() ? std::nullopt : mean(it->second));
    }
  }
  return out;
}

Series zeta_series(const CitationGraph& graph, const Corpus& corpus, FieldIndex field, std::span<const int> years,
                   ZetaIndex index) {
  std::map<int, ReferenceSplit> counts;  // cross = external, same = internal
  for (PaperIndex p : corpus.field_papers(field)) {
    for (PaperIndex q : graph.citations(p)) {
      const auto& citing = corpus.record(q);
      const int year = index == ZetaIndex::kCitingYear ? citing.year : corpus.record(p).year;
      auto& acc = counts[year];
      if (citing.fields.contains(field)) {
        ++acc.same;
      } else {
        ++acc.cross;
      }
    }
  }
  Series out;
  out.reserve(years.size());
  for (int y : years) {
    const auto it = counts.find(y);
    out.push_back(it == counts.end() ? std::nullopt : ratio(it->second.cross, it->second.same));
  }
  return out;
}

std::vector<PartnerField> top_partner_fields(const CitationGraph& graph, const Corpus& corpus, FieldIndex field,
                                             TimeWindow window, PartnerDirection direction, std::size_t k) {
  std::vector<double> volume(corpus.taxonomy().size(), 0.0);
  for (PaperIndex p : corpus.field_papers(field)) {
    if (direction == PartnerDirection::kReferred) {
      if (!window.contains(corpus.record(p).year)) continue;
      for (PaperIndex q : graph.references(p)) add_reference_weight(volume, corpus.record(q).fields, graph.multiplicity());
    } else {
      for (PaperIndex q : graph.citations(p)) {
        const auto& citing = corpus.record(q);
        if (window.contains(citing.year)) add_reference_weight(volume, citing.fields, graph.multiplicity());
      }
    }
  }
  std::vector<PartnerField> out;
  for (FieldIndex f = 0; f < volume.size(); ++f) {
    if (f != field && volume[f] > 0.0) out.push_back({f, volume[f]});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.volume > b.volume; });
  if (out.size() > k) out.resize(k);
  return out;
}

std::vector<CotagPoint> cotag_series(const Corpus& corpus, FieldIndex a, FieldIndex b,
                                     std::span<const TimeWindow> windows) {
  std::vector<CotagPoint> out;
  for (const auto& window : windows) {
    CotagPoint point{window};
    const auto first = corpus.by_year().lower_bound(window.start_year);
    const auto last = corpus.by_year().upper_bound(window.end_year);
    for (auto it = first; it != last; ++it) {
      for (PaperIndex p : it->second) {
        const FieldSet fields = corpus.record(p).fields;
        if (!fields.contains(a)) continue;
        if (fields.size() >= 2) ++point.multi_tagged_a;
        if (fields.contains(b) && a != b) ++point.cotagged;
      }
    }
    if (point.multi_tagged_a > 0) {
      point.probability = static_cast<double>(point.cotagged) / static_cast<double>(point.multi_tagged_a);
    }
    if (!out.empty() && out.back().cotagged > 0) {
      const auto prev = static_cast<double>(out.back().cotagged);
      point.pct_change = (static_cast<double>(point.cotagged) - prev) / prev * 100.0;
    }
    out.push_back(point);
  }
  return out;
}

std::vector<EvidenceRow> evidence_series(const CitationGraph& graph, const Corpus& corpus, std::span<const int> years) {
  const std::set<int> wanted(years.begin(), years.end());
  std::map<int, EvidenceRow> rows;
  for (int y : wanted) rows[y].year = y;
  if (wanted.empty()) return {};

  std::unordered_map<std::string, FieldSet> expertise;
  for (const auto& [year, papers] : corpus.by_year()) {
    if (year > *wanted.rbegin()) break;
    for (PaperIndex p : papers) {
      const auto& r = corpus.record(p);
      for (const auto& author : r.authors) expertise[author] |= r.fields;
    }
    if (!wanted.contains(year)) continue;

    EvidenceRow& row = rows[year];
    row.papers = papers.size();
    std::size_t multi = 0;
    std::size_t cross = 0;
    std::size_t same = 0;
    std::size_t citing = 0;
    std::size_t cited_fields = 0;
    std::size_t authored = 0;
    std::size_t authors = 0;
    std::size_t author_fields = 0;
    for (PaperIndex p : papers) {
      const auto& r = corpus.record(p);
      multi += r.fields.size() > 1 ? 1 : 0;
      const auto s = split_references(graph, corpus, p);
      cross += s.cross;
      same += s.same;
      if (!graph.references(p).empty()) {
        FieldSet cited;
        for (PaperIndex q : graph.references(p)) cited |= corpus.record(q).fields;
        ++citing;
        cited_fields += cited.size();
      }
      if (!r.authors.empty()) {
        FieldSet team;
        for (const auto& author : r.authors) team |= expertise[author];
        ++authored;
        authors += r.authors.size();
        author_fields += team.size();
      }
    }
    row.multi_field_fraction = ratio(multi, papers.size());
    row.mean_fields_cited = ratio(cited_fields, citing);
    row.tau = ratio(cross, same);
    row.mean_team_size = ratio(authors, authored);
    row.mean_author_fields = ratio(author_fields, authored);
  }
  std::vector<EvidenceRow> out;
  for (auto& [year, row] : rows) out.push_back(row);
  return out;
}

std::optional<SegmentFit> fit_two_segments(std::span<const double> values, std::size_t min_segment) {
  min_segment = std::max<std::size_t>(min_segment, 1);
  const std::size_t n = values.size();
  if (n < 2 * min_segment) return std::nullopt;
  std::optional<SegmentFit> best;
  for (std::size_t split = min_segment; split + min_segment <= n; ++split) {
    SegmentFit fit;
    fit.split = split;
    double a = 0.0;
    double b = 0.0;
    for (std::size_t i = 0; i < split; ++i) a += values[i];
    for (std::size_t i = split; i < n; ++i) b += values[i];
    fit.mean_before = a / static_cast<double>(split);
    fit.mean_after = b / static_cast<double>(n - split);
    for (std::size_t i = 0; i < n; ++i) {
      const double d = values[i] - (i < split ? fit.mean_before : fit.mean_after);
      fit.sse += d * d;
    }
    // Near-ties keep the earlier split.
    if (!best || fit.sse < best->sse * (1.0 - 1e-12)) best = fit;
  }
  return best;
}

namespace {

struct DefinedSeries {
  std::vector<int> years;
  std::vector<double> values;
};

DefinedSeries defined(const std::vector<int>& years, const Series& series) {
  DefinedSeries out;
  for (std::size_t i = 0; i < years.size() && i < series.size(); ++i) {
    if (!series[i]) continue;
    out.years.push_back(years[i]);
    out.values.push_back(*series[i]);
  }
  return out;
}

bool significant(double from, double to, double min_relative_shift) {
  const double level = std::max(std::abs(from), std::abs(to));
  return std::abs(to - from) > min_relative_shift * level;
}

}  // namespace

PhaseLabeling detect_phases(const FieldTrajectory& trajectory, const PhaseParams& params) {
  const auto tau = defined(trajectory.years, trajectory.tau);
  if (tau.values.size() < params.min_years || tau.values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "detect_phases: " + std::to_string(tau.values.size()) +
                                                 " defined tau values, need " + std::to_string(params.min_years));
  }
  PhaseLabeling out;
  const int start = trajectory.years.front();
  const int end = trajectory.years.back();

  std::optional<SegmentFit> tau_fit = fit_two_segments(tau.values, params.min_segment);
  if (tau_fit && tau_fit->mean_after < tau_fit->mean_before &&
      significant(tau_fit->mean_before, tau_fit->mean_after, params.min_relative_shift)) {
    out.tau_change_year = tau.years[tau_fit->split];
  } else {
    out.diagnostics.push_back("no significant tau drop");
  }

  const auto zeta = defined(trajectory.years, trajectory.zeta);
  std::optional<SegmentFit> zeta_fit = fit_two_segments(zeta.values, params.min_segment);
  if (zeta_fit && zeta_fit->mean_after > zeta_fit->mean_before &&
      significant(zeta_fit->mean_before, zeta_fit->mean_after, params.min_relative_shift)) {
    out.zeta_change_year = zeta.years[zeta_fit->split];
  } else {
    out.diagnostics.push_back("no significant zeta rise");
  }

  if (!out.tau_change_year) {
    const double level = kernels::sum(tau.values) / static_cast<double>(tau.values.size());
    out.phases.push_back({Phase::kMatured, start, end, level});
    if (out.zeta_change_year) out.diagnostics.push_back("zeta rise without a preceding tau drop; not labeled");
    return out;
  }
  const int drop = *out.tau_change_year;
  out.phases.push_back({Phase::kGrowing, start, drop - 1, tau_fit->mean_before});
  if (out.zeta_change_year && *out.zeta_change_year > drop) {
    const int rise = *out.zeta_change_year;
    out.phases.push_back({Phase::kMatured, drop, rise - 1, tau_fit->mean_after});
    out.phases.push_back({Phase::kInterdisciplinary, rise, end, zeta_fit->mean_after});
  } else {
    if (out.zeta_change_year) out.diagnostics.push_back("zeta rise does not follow the tau drop; not labeled");
    out.phases.push_back({Phase::kMatured, drop, end, tau_fit->mean_after});
  }
  return out;
}

FieldTrajectory build_trajectory(const CitationGraph& graph, const Corpus& corpus, FieldIndex field,
                                 std::span<const int> years, std::span<const TimeWindow> periods,
                                 const TrajectoryOptions& options) {
  FieldTrajectory t;
  t.field = field;
  t.years.assign(years.begin(), years.end());
  t.tau = tau_series(graph, corpus, field, years, options.tau_mode);
  t.zeta = zeta_series(graph, corpus, field, years, options.zeta_index);
  for (const auto& period : periods) {
    t.top_referred.emplace_back(
        period, top_partner_fields(graph, corpus, field, period, PartnerDirection::kReferred, options.partner_count));
    t.top_citing.emplace_back(
        period, top_partner_fields(graph, corpus, field, period, PartnerDirection::kCiting, options.partner_count));
  }
  const PhaseParams defaults;
  const auto tau_defined = std::count_if(t.tau.begin(), t.tau.end(), [](const auto& v) { return v.has_value(); });
  if (!t.years.empty() && static_cast<std::size_t>(tau_defined) >= defaults.min_years) {
    t.phases = detect_phases(t, defaults).phases;
  }
  return t;
}

std::vector<int> year_range(int first, int last) {
  std::vector<int> out;
  for (int y = first; y <= last; ++y) out.push_back(y);
  return out;
}

MetricReport trajectory_report(std::span<const FieldTrajectory> trajectories, const FieldTaxonomy& taxonomy) {
  MetricReport report("trajectory", {"field", "year", "tau", "zeta"});
  for (const auto& t : trajectories) {
    for (std::size_t i = 0; i < t.years.size(); ++i) {
      report.add_row({cell(taxonomy.abbreviation(t.field)), cell(t.years[i]), cell(t.tau[i]), cell(t.zeta[i])});
    }
  }
  return report;
}

MetricReport phases_report(std::span<const std::pair<FieldIndex, PhaseLabeling>> labelings,
                           const FieldTaxonomy& taxonomy) {
  MetricReport report("phases", {"field", "phase", "start", "end", "segment_mean"});
  for (const auto& [field, labeling] : labelings) {
    const auto& abbr = taxonomy.abbreviation(field);
    for (const auto& span : labeling.phases) {
      report.add_row({cell(abbr), cell(to_string(span.label)), cell(span.start), cell(span.end), cell(span.segment_mean)});
    }
    report.set_meta(abbr + ".tau_change_year",
                    labeling.tau_change_year ? std::to_string(*labeling.tau_change_year) : "");
    report.set_meta(abbr + ".zeta_change_year",
                    labeling.zeta_change_year ? std::to_string(*labeling.zeta_change_year) : "");
    std::string diagnostics;
    for (const auto& d : labeling.diagnostics) diagnostics += (diagnostics.empty() ? "" : "; ") + d;
    report.set_meta(abbr + ".diagnostics", diagnostics);
  }
  return report;
}

MetricReport partners_report(std::span<const FieldTrajectory> trajectories, const FieldTaxonomy& taxonomy) {
  MetricReport report("partners", {"field", "direction", "window_start", "window_end", "rank", "partner", "volume"});
  for (const auto& t : trajectories) {
    for (const auto& [list, direction] :
         {std::pair{&t.top_referred, PartnerDirection::kReferred}, std::pair{&t.top_citing, PartnerDirection::kCiting}}) {
      for (const auto& [window, partners] : *list) {
        for (std::size_t i = 0; i < partners.size(); ++i) {
          report.add_row({cell(taxonomy.abbreviation(t.field)), cell(to_string(direction)), cell(window.start_year),
                          cell(window.end_year), cell(i + 1), cell(taxonomy.abbreviation(partners[i].field)),
                          cell(partners[i].volume)});
        }
      }
    }
  }
  return report;
}

MetricReport cotag_report(std::span<const CotagPoint> points, const FieldTaxonomy& taxonomy, FieldIndex a,
                          FieldIndex b) {
  MetricReport report("cotag", {"field_a", "field_b", "window_start", "window_end", "cotagged", "multi_tagged_a",
                                "probability", "pct_change"});
  for (const auto& p : points) {
    report.add_row({cell(taxonomy.abbreviation(a)), cell(taxonomy.abbreviation(b)), cell(p.window.start_year),
                    cell(p.window.end_year), cell(p.cotagged), cell(p.multi_tagged_a), cell(p.probability),
                    cell(p.pct_change)});
  }
  return report;
}

MetricReport evidence_report(std::span<const EvidenceRow> rows) {
  MetricReport report("evidence", {"year", "papers", "multi_field_fraction", "mean_fields_cited", "tau",
                                   "mean_team_size", "mean_author_fields"});
  for (const auto& r : rows) {
    report.add_row({cell(r.year), cell(r.papers), cell(r.multi_field_fraction), cell(r.mean_fields_cited),
                    cell(r.tau), cell(r.mean_team_size), cell(r.mean_author_fields)});
  }
  return report;
}

}  // namespace citeflow
