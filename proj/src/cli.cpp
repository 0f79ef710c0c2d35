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

#include "citeflow/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "citeflow/diversity.hpp"
#include "citeflow/error.hpp"
#include "citeflow/impact.hpp"
#include "citeflow/parser.hpp"
#include "citeflow/reciprocity.hpp"
#include "citeflow/stats.hpp"
#include "citeflow/synth.hpp"
#include "citeflow/text.hpp"
#include "citeflow/trajectory.hpp"

namespace citeflow::cli {
namespace {

enum class LogLevel { kQuiet, kInfo, kDebug };

LogLevel log_level() {
  const char* env = std::getenv("CITEFLOW_LOG");
  if (env == nullptr) return LogLevel::kQuiet;
  const std::string_view v(env);
  if (v == "debug") return LogLevel::kDebug;
  if (v == "info") return LogLevel::kInfo;
  return LogLevel::kQuiet;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  RunConfig config;
  // rank / buckets
  std::string metric = "rdi";
  std::string log_base = "e";
  std::string keyword_scope = "window";
  bool kdi_normalized = false;
  std::size_t bucket_count = 5;
  // impact
  int horizon = 5;
  bool include_self = false;
  bool lifetime_top = false;
  std::string share_mode = "top";
  double top_fraction = 0.05;
  // reciprocity
  bool exclude_diagonal = false;
  std::vector<std::string> groups;
  // acp
  std::string focal;
  std::string target;
  double threshold = 0.5;
  // trajectory / evidence
  std::string years;
  std::vector<std::string> periods;
  std::string tau_mode = "pooled";
  std::string zeta_index = "citing";
  std::size_t min_years = 10;
  std::size_t min_segment = 2;
  double min_shift = 0.1;
  std::size_t partners = 5;
  std::string cotag;
  // generate
  std::string spec_path;
  std::vector<std::string> assignments;
};

struct Context {
  std::shared_ptr<const FieldTaxonomy> taxonomy;
  Corpus corpus;
  ParseReport parse_report;
  std::optional<CitationGraph> graph;
};

std::shared_ptr<const FieldTaxonomy> load_taxonomy(const RunConfig& c) {
  if (c.taxonomy_path.empty()) return FieldTaxonomy::default_taxonomy();
  return std::make_shared<const FieldTaxonomy>(FieldTaxonomy::load_file(c.taxonomy_path));
}

Context load(const Options& o, bool need_graph, bool keep_abstracts = false) {
  Context ctx;
  ctx.taxonomy = load_taxonomy(o.config);
  ParseOptions po;
  po.strictness = o.config.strict ? Strictness::kStrict : Strictness::kLenient;
  po.keep_abstracts = keep_abstracts;
  if (log_level() >= LogLevel::kInfo) std::clog << "citeflow: parsing " << o.config.input_path << '\n';
  auto parsed = parse_corpus_file(o.config.input_path, ctx.taxonomy, po);
  ctx.corpus = std::move(parsed.corpus);
  ctx.parse_report = std::move(parsed.report);
  if (need_graph) {
    if (log_level() >= LogLevel::kInfo) std::clog << "citeflow: building graph over " << ctx.corpus.size() << " records\n";
    ctx.graph = CitationGraph::build(ctx.corpus, o.config.multiplicity);
  }
  return ctx;
}

std::vector<TimeWindow> windows_or_full(const std::vector<std::string>& texts) {
  std::vector<TimeWindow> out;
  for (const auto& t : texts) out.push_back(TimeWindow::parse(t));
  if (out.empty()) out.push_back(TimeWindow::unbounded());
  return out;
}

TimeWindow single_window(const std::vector<std::string>& texts) {
  if (texts.size() > 1) throw UsageError("this subcommand accepts one --window");
  return windows_or_full(texts).front();
}

std::vector<int> year_span(const Options& o, const Corpus& corpus) {
  if (!o.years.empty()) {
    const auto w = TimeWindow::parse(o.years);
    return year_range(w.start_year, w.end_year);
  }
  if (corpus.empty()) return {};
  return year_range(corpus.by_year().begin()->first, corpus.by_year().rbegin()->first);
}

DiversityMetric parse_metric(const std::string& m) {
  if (text::iequals(m, "rdi")) return DiversityMetric::kRdi;
  if (text::iequals(m, "kdi")) return DiversityMetric::kKdi;
  throw UsageError("--metric must be rdi or kdi");
}

DiversityOptions diversity_options(const Options& o) {
  DiversityOptions d;
  if (o.log_base == "e") {
    d.log_base = std::numbers::e;
  } else if (o.log_base == "2") {
    d.log_base = 2.0;
  } else if (o.log_base == "10") {
    d.log_base = 10.0;
  } else {
    throw UsageError("--log-base must be e, 2 or 10");
  }
  d.keyword_scope = o.keyword_scope == "global" ? KeywordScope::kCorpusGlobal : KeywordScope::kWindowLocal;
  d.kdi_normalized = o.kdi_normalized;
  return d;
}

ImpactOptions impact_options(const Options& o) {
  ImpactOptions i;
  if (o.horizon < 1) throw UsageError("--horizon must be at least 1");
  i.horizon_years = o.horizon;
  i.exclude_first_author_self = !o.include_self;
  i.lifetime_ranking = o.lifetime_top;
  i.top_fraction = o.top_fraction;
  return i;
}

std::string window_list(const std::vector<TimeWindow>& windows) {
  std::string s;
  for (const auto& w : windows) {
    if (!s.empty()) s += ' ';
    s += w == TimeWindow::unbounded() ? std::string("all") : w.to_string();
  }
  return s;
}

using Handler = std::function<std::vector<MetricReport>(const Options&)>;

std::vector<MetricReport> cmd_validate(const Options& o) {
  const auto ctx = load(o, false, true);
  const auto& pr = ctx.parse_report;
  MetricReport report("validate", {"line", "record", "severity", "code", "message"});
  for (const auto& d : pr.diagnostics) {
    report.add_row({cell(d.line), cell(d.record), cell(to_string(d.severity)), cell(d.code), cell(d.message)});
  }
  report.set_meta("blocks", std::to_string(pr.blocks));
  report.set_meta("records_parsed", std::to_string(pr.records_parsed));
  report.set_meta("records_skipped", std::to_string(pr.records_skipped));
  report.set_meta("fields_dropped", std::to_string(pr.fields_dropped));
  report.set_meta("diagnostics", std::to_string(pr.diagnostics.size()));
  return {report};
}

std::vector<MetricReport> cmd_stats(const Options& o) {
  const auto ctx = load(o, false);
  const auto window = single_window(o.config.windows);
  return {corpus_stats(ctx.corpus.view(window))};
}

std::vector<MetricReport> cmd_rank(const Options& o) {
  const auto ctx = load(o, true);
  const auto metric = parse_metric(o.metric);
  const auto options = diversity_options(o);
  const auto windows = windows_or_full(o.config.windows);
  const auto rankings = rank_fields(*ctx.graph, ctx.corpus, metric, windows, options);
  auto report = ranking_report(rankings, metric, *ctx.graph, ctx.corpus.taxonomy(), options);
  report.set_meta("windows", window_list(windows));
  return {report};
}

std::vector<MetricReport> cmd_impact(const Options& o) {
  const auto ctx = load(o, true);
  const auto window = single_window(o.config.windows);
  const auto view = ctx.corpus.view(window);
  const auto scores = compute_impact(*ctx.graph, view, impact_options(o));
  auto papers = impact_report(scores, ctx.corpus);
  papers.set_meta("window", window == TimeWindow::unbounded() ? "all" : window.to_string());

  const ShareMode mode = o.share_mode == "hit-rate" ? ShareMode::kHitRate : ShareMode::kShareOfTop;
  MetricReport shares("top_share", {"field_abbr", "fraction", "numerator", "denominator"});
  const auto& taxonomy = ctx.corpus.taxonomy();
  if (!view.empty()) {
    for (FieldIndex f = 0; f < taxonomy.size(); ++f) {
      const auto s = top_cited_share(scores, ctx.corpus, f, window, mode);
      shares.add_row({cell(taxonomy.abbreviation(f)), cell(s.fraction), cell(s.numerator), cell(s.denominator)});
    }
  }
  shares.set_meta("share_mode", mode == ShareMode::kHitRate ? "hit-rate" : "share-of-top");
  shares.set_meta("top_count", std::to_string(scores.top_count()));
  return {papers, shares};
}

std::vector<MetricReport> cmd_buckets(const Options& o) {
  const auto ctx = load(o, true);
  const auto window = single_window(o.config.windows);
  const auto view = ctx.corpus.view(window);
  const auto metric = parse_metric(o.metric);
  const auto options = diversity_options(o);
  const auto values = paper_diversity(*ctx.graph, view, metric, options);
  const auto scores = compute_impact(*ctx.graph, view, impact_options(o));
  if (o.bucket_count == 0) throw UsageError("--buckets must be positive");
  auto report = bucket_report(bucket_impact(values, scores, o.bucket_count));
  report.set_meta("metric", to_string(metric));
  report.set_meta("log_base", log_base_label(options.log_base));
  report.set_meta("multiplicity", to_string(ctx.graph->multiplicity()));
  report.set_meta("coverage", std::to_string(values.size()));
  report.set_meta("population", std::to_string(view.size()));
  return {report};
}

std::vector<MetricReport> cmd_reciprocity(const Options& o) {
  const auto ctx = load(o, true);
  const auto window = single_window(o.config.windows);
  const auto& taxonomy = ctx.corpus.taxonomy();
  const auto matrix = citation_fraction_matrix(*ctx.graph, ctx.corpus, window);
  auto matrix_report = fraction_matrix_report(matrix, taxonomy);
  matrix_report.set_meta("multiplicity", to_string(ctx.graph->multiplicity()));

  std::vector<FieldGroup> groups;
  const auto defaults = default_field_groups(taxonomy);
  if (o.groups.empty()) {
    groups.push_back({"all", taxonomy.all()});
    groups.insert(groups.end(), defaults.begin(), defaults.end());
  }
  for (const auto& g : o.groups) {
    if (g == "all") {
      groups.push_back({"all", taxonomy.all()});
      continue;
    }
    const auto it = std::find_if(defaults.begin(), defaults.end(), [&](const auto& d) { return text::iequals(d.name, g); });
    if (it != defaults.end()) {
      groups.push_back(*it);
      continue;
    }
    // Ad-hoc group: comma-separated abbreviations.
    FieldGroup custom{g, {}};
    for (const auto& label : text::split_trimmed(g, ',')) custom.members.insert(taxonomy.require(label));
    groups.push_back(custom);
  }
  MetricReport pearson_report("pearson", {"group", "members", "r", "points", "diagnostic"});
  for (const auto& g : groups) {
    const auto r = reciprocity_pearson(matrix, g.members, !o.exclude_diagonal);
    std::string members;
    for (FieldIndex f : g.members.indices()) members += (members.empty() ? "" : " ") + taxonomy.abbreviation(f);
    pearson_report.add_row({cell(g.name), cell(members), cell(r.r), cell(r.points), cell(r.diagnostic)});
  }
  pearson_report.set_meta("diagonal", o.exclude_diagonal ? "excluded" : "included");
  pearson_report.set_meta("multiplicity", to_string(ctx.graph->multiplicity()));
  return {matrix_report, pearson_report};
}

std::vector<MetricReport> cmd_acp(const Options& o) {
  const auto ctx = load(o, true);
  const auto& taxonomy = ctx.corpus.taxonomy();
  const FieldIndex focal = taxonomy.require(o.focal);
  const FieldIndex target = taxonomy.require(o.target);
  const auto window = single_window(o.config.windows);
  const auto result = acp_bucket_test(*ctx.graph, ctx.corpus, focal, target, window, o.threshold);
  auto report = acp_report(result, taxonomy, focal, target);
  report.set_meta("window", window.to_string());
  report.set_meta("threshold", text::format_double(o.threshold));
  report.set_meta("threshold_rule", "strictly greater");
  report.set_meta("multiplicity", to_string(ctx.graph->multiplicity()));
  return {report};
}

std::vector<MetricReport> cmd_trajectory(const Options& o) {
  const auto ctx = load(o, true);
  const auto& taxonomy = ctx.corpus.taxonomy();
  if (o.config.fields.empty()) throw UsageError("trajectory needs at least one --field");
  const auto years = year_span(o, ctx.corpus);
  std::vector<TimeWindow> periods;
  for (const auto& p : o.periods) periods.push_back(TimeWindow::parse(p));

  TrajectoryOptions topts;
  topts.tau_mode = o.tau_mode == "paper-mean" ? TauMode::kPaperMean : TauMode::kPooled;
  topts.zeta_index = o.zeta_index == "cited" ? ZetaIndex::kCitedYear : ZetaIndex::kCitingYear;
  topts.partner_count = o.partners;
  PhaseParams params;
  params.min_years = o.min_years;
  params.min_segment = o.min_segment;
  params.min_relative_shift = o.min_shift;

  std::vector<FieldTrajectory> trajectories;
  std::vector<std::pair<FieldIndex, PhaseLabeling>> labelings;
  for (const auto& label : o.config.fields) {
    const FieldIndex f = taxonomy.require(label);
    auto t = build_trajectory(*ctx.graph, ctx.corpus, f, years, periods, topts);
    PhaseLabeling labeling;
    try {
      labeling = detect_phases(t, params);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidArgument) throw;
      labeling.diagnostics.push_back(e.what());
    }
    t.phases = labeling.phases;
    labelings.emplace_back(f, std::move(labeling));
    trajectories.push_back(std::move(t));
  }
  auto traj = trajectory_report(trajectories, taxonomy);
  traj.set_meta("tau_mode", to_string(topts.tau_mode));
  traj.set_meta("zeta_index", to_string(topts.zeta_index));
  traj.set_meta("same_field_rule", "shares any field");
  auto phases = phases_report(labelings, taxonomy);
  phases.set_meta("min_years", std::to_string(params.min_years));
  phases.set_meta("min_segment", std::to_string(params.min_segment));
  phases.set_meta("min_relative_shift", text::format_double(params.min_relative_shift));
  std::vector<MetricReport> out{traj, phases};
  if (!periods.empty()) out.push_back(partners_report(trajectories, taxonomy));
  if (!o.cotag.empty()) {
    const FieldIndex a = taxonomy.require(o.config.fields.front());
    const FieldIndex b = taxonomy.require(o.cotag);
    std::vector<TimeWindow> windows = periods;
    if (windows.empty()) {
      for (int y : years) windows.push_back(TimeWindow{y, y});
    }
    out.push_back(cotag_report(cotag_series(ctx.corpus, a, b, windows), taxonomy, a, b));
  }
  return out;
}

std::vector<MetricReport> cmd_evidence(const Options& o) {
  const auto ctx = load(o, true);
  const auto years = year_span(o, ctx.corpus);
  auto report = evidence_report(evidence_series(*ctx.graph, ctx.corpus, years));
  report.set_meta("tau", "pooled over all fields; same-field = shares any field");
  report.set_meta("author_expertise", "cumulative corpus publication history");
  return {report};
}

std::vector<MetricReport> cmd_graph(const Options& o) {
  const auto ctx = load(o, true);
  MetricReport edges("edges", {"citing_id", "cited_id"});
  for (PaperIndex p = 0; p < ctx.corpus.size(); ++p) {
    for (PaperIndex q : ctx.graph->references(p)) {
      edges.add_row({cell(static_cast<std::int64_t>(ctx.corpus.record(p).id)),
                     cell(static_cast<std::int64_t>(ctx.corpus.record(q).id))});
    }
  }
  edges.set_meta("edges", std::to_string(ctx.graph->edge_count()));
  edges.set_meta("unresolved_references", std::to_string(ctx.graph->total_unresolved()));
  auto flow = field_flow_report(ctx.graph->field_flow(), ctx.corpus.taxonomy(), "field_flow");
  flow.set_meta("multiplicity", to_string(ctx.graph->multiplicity()));
  return {edges, flow};
}

void stamp(MetricReport& report, const Options& o, const Context* ctx) {
  (void)ctx;
  std::string echo;
  for (const auto& a : o.config.echo) echo += (echo.empty() ? "" : " ") + a;
  report.set_meta("tool", "citeflow");
  report.set_meta("version", kToolVersion);
  report.set_meta("subcommand", o.config.subcommand);
  report.set_meta("config", echo);
}

std::string derived_path(const std::string& path, const std::string& name) {
  const std::filesystem::path p(path);
  auto stem = p.stem().string();
  auto ext = p.extension().string();
  return (p.parent_path() / (stem + "." + name + ext)).string();
}

void emit(const std::vector<MetricReport>& reports, const Options& o, std::ostream& out) {
  const auto& c = o.config;
  if (c.format == Format::kJson) {
    if (c.output_path.empty()) {
      write_json(out, reports);
      return;
    }
    std::ofstream file(c.output_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::kIo, "cannot write '" + c.output_path + "'");
    write_json(file, reports);
    return;
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (c.output_path.empty()) {
      if (i) out << '\n';
      write_csv(out, reports[i]);
      continue;
    }
    const auto path = i == 0 ? c.output_path : derived_path(c.output_path, reports[i].name());
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
    write_csv(file, reports[i]);
  }
}

void error_record(std::ostream& err, const std::string& code, const std::string& message,
                  const std::optional<Diagnostic>& diagnostic = std::nullopt) {
  nlohmann::ordered_json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  if (diagnostic) {
    j["error"]["diagnostic"] = {{"line", diagnostic->line},
                                {"record", diagnostic->record},
                                {"severity", to_string(diagnostic->severity)},
                                {"code", diagnostic->code},
                                {"message", diagnostic->message}};
  }
  err << j.dump() << '\n';
}

int run_generate(const Options& o, std::ostream& out) {
  const auto taxonomy = load_taxonomy(o.config);
  GeneratorSpec spec;
  if (!o.spec_path.empty()) spec = GeneratorSpec::parse_file(o.spec_path, *taxonomy);
  for (const auto& a : o.assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects key=value, got '" + a + "'");
    spec.set(a.substr(0, eq), a.substr(eq + 1), *taxonomy);
  }
  if (o.config.output_path.empty()) {
    generate(out, spec, *taxonomy);
    return 0;
  }
  std::ofstream file(o.config.output_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIo, "cannot write '" + o.config.output_path + "'");
  generate(file, spec, *taxonomy);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.config.echo = args;
  CLI::App app{"Citation-network interdisciplinarity analysis", "citeflow"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string format = "csv";
  std::string multiplicity = "full";
  auto common = [&](CLI::App* sub, bool graph) {
    sub->add_option("input", o.config.input_path, "Corpus file in the tagged record format")->required();
    sub->add_option("--taxonomy", o.config.taxonomy_path, "Taxonomy file (Full Name<TAB>ABBR per line)");
    sub->add_option("-o,--output", o.config.output_path, "Output path (default stdout)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--strict", o.config.strict, "Abort on the first parse error");
    if (graph) {
      sub->add_option("--multiplicity", multiplicity, "full or fractional")->check(CLI::IsMember({"full", "fractional"}));
    }
  };
  auto impact_flags = [&](CLI::App* sub) {
    sub->add_option("--horizon", o.horizon, "Citation horizon in years");
    sub->add_flag("--include-self-citations", o.include_self, "Keep first-author self-citations");
    sub->add_flag("--lifetime-top", o.lifetime_top, "Rank the top set by all-time citations");
    sub->add_option("--top-fraction", o.top_fraction, "Top-cited fraction")->check(CLI::Range(0.0, 1.0));
  };

  std::map<std::string, Handler> handlers;

  auto* validate = app.add_subcommand("validate", "Parse and report diagnostics");
  common(validate, false);
  handlers["validate"] = cmd_validate;

  auto* stats = app.add_subcommand("stats", "Corpus summary per field");
  common(stats, false);
  stats->add_option("--window", o.config.windows, "START:END");
  handlers["stats"] = cmd_stats;

  auto* rank = app.add_subcommand("rank", "Rank fields by RDI or KDI per window");
  common(rank, true);
  rank->add_option("--metric", o.metric, "rdi or kdi")->required();
  rank->add_option("--window", o.config.windows, "START:END (repeatable)");
  rank->add_option("--log-base", o.log_base, "e, 2 or 10");
  rank->add_option("--keyword-scope", o.keyword_scope, "window or global")->check(CLI::IsMember({"window", "global"}));
  rank->add_flag("--kdi-normalized", o.kdi_normalized, "Normalize keyword overlaps to sum to 1");
  handlers["rank"] = cmd_rank;

  auto* impact = app.add_subcommand("impact", "Per-paper CP, JIF and top-cited flags");
  common(impact, true);
  impact->add_option("--window", o.config.windows, "START:END");
  impact->add_option("--share-mode", o.share_mode, "top or hit-rate")->check(CLI::IsMember({"top", "hit-rate"}));
  impact_flags(impact);
  handlers["impact"] = cmd_impact;

  auto* buckets = app.add_subcommand("buckets", "Impact by equal-width interdisciplinarity bucket");
  common(buckets, true);
  buckets->add_option("--metric", o.metric, "rdi or kdi");
  buckets->add_option("--window", o.config.windows, "START:END");
  buckets->add_option("--buckets", o.bucket_count, "Number of buckets");
  buckets->add_option("--log-base", o.log_base, "e, 2 or 10");
  buckets->add_option("--keyword-scope", o.keyword_scope, "window or global")->check(CLI::IsMember({"window", "global"}));
  buckets->add_flag("--kdi-normalized", o.kdi_normalized, "Normalize keyword overlaps to sum to 1");
  impact_flags(buckets);
  handlers["buckets"] = cmd_buckets;

  auto* reciprocity = app.add_subcommand("reciprocity", "Citation-fraction matrix and Pearson reciprocity");
  common(reciprocity, true);
  reciprocity->add_option("--window", o.config.windows, "START:END");
  reciprocity->add_option("--group", o.groups, "all, a built-in group name, or comma-separated abbreviations");
  reciprocity->add_flag("--exclude-diagonal", o.exclude_diagonal, "Drop self pairs (i == j)");
  handlers["reciprocity"] = cmd_reciprocity;

  auto* acp = app.add_subcommand("acp", "Bucket test of average citations per paper");
  common(acp, true);
  acp->add_option("--focal", o.focal, "Focal field")->required();
  acp->add_option("--target", o.target, "Target field")->required();
  acp->add_option("--window", o.config.windows, "START:END of focal papers")->required();
  acp->add_option("--threshold", o.threshold, "Reference-share threshold")->check(CLI::Range(0.0, 1.0));
  handlers["acp"] = cmd_acp;

  auto* trajectory = app.add_subcommand("trajectory", "tau/zeta series and life-cycle phases");
  common(trajectory, true);
  trajectory->add_option("--field", o.config.fields, "Field (repeatable)")->required();
  trajectory->add_option("--years", o.years, "START:END (default: corpus span)");
  trajectory->add_option("--period", o.periods, "START:END for partner rankings and co-tagging (repeatable)");
  trajectory->add_option("--tau-mode", o.tau_mode, "pooled or paper-mean")->check(CLI::IsMember({"pooled", "paper-mean"}));
  trajectory->add_option("--zeta-index", o.zeta_index, "citing or cited")->check(CLI::IsMember({"citing", "cited"}));
  trajectory->add_option("--min-years", o.min_years, "Minimum defined tau years for phase detection");
  trajectory->add_option("--min-segment", o.min_segment, "Minimum segment length");
  trajectory->add_option("--min-shift", o.min_shift, "Minimum relative level shift");
  trajectory->add_option("--partners", o.partners, "Partner fields per period");
  trajectory->add_option("--cotag", o.cotag, "Second field for the co-tagging series");
  handlers["trajectory"] = cmd_trajectory;

  auto* evidence = app.add_subcommand("evidence", "Per-year interdisciplinarity evidence series");
  common(evidence, true);
  evidence->add_option("--years", o.years, "START:END (default: corpus span)");
  handlers["evidence"] = cmd_evidence;

  auto* graph = app.add_subcommand("graph", "Export the edge list and field flow matrix");
  common(graph, true);
  handlers["graph"] = cmd_graph;

  auto* gen = app.add_subcommand("generate", "Write a synthetic corpus");
  gen->add_option("--spec", o.spec_path, "Generator spec file (key = value)");
  gen->add_option("--set", o.assignments, "key=value override (repeatable)");
  gen->add_option("-o,--output", o.config.output_path, "Output path (default stdout)");
  gen->add_option("--taxonomy", o.config.taxonomy_path, "Taxonomy file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    error_record(err, "usage", e.what());
    return 2;
  }

  o.config.subcommand = app.get_subcommands().front()->get_name();
  o.config.format = format == "json" ? Format::kJson : Format::kCsv;
  o.config.multiplicity = multiplicity == "fractional" ? Multiplicity::kFractional : Multiplicity::kFull;

  try {
    if (o.config.subcommand == "generate") return run_generate(o, out);
    auto reports = handlers.at(o.config.subcommand)(o);
    for (auto& r : reports) stamp(r, o, nullptr);
    emit(reports, o, out);
    return 0;
  } catch (const UsageError& e) {
    error_record(err, "usage", e.what());
    return 2;
  } catch (const ParseError& e) {
    error_record(err, to_string(e.code()), e.what(), e.diagnostic());
    return 1;
  } catch (const Error& e) {
    error_record(err, to_string(e.code()), e.what());
    return e.code() == ErrorCode::kInvalidArgument ? 2 : 1;
  } catch (const std::exception& e) {
    error_record(err, "internal", e.what());
    return 1;
  }
}

}  // namespace citeflow::cli
