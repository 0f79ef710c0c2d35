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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "citeflow/cli.hpp"
#include "citeflow/parser.hpp"
#include "citeflow/reciprocity.hpp"
#include "citeflow/report.hpp"
#include "citeflow/synth.hpp"
#include "citeflow/text.hpp"

using namespace citeflow;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.status = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) { return std::string(CITEFLOW_FIXTURES) + "/" + name; }

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "citeflow_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string synthetic_corpus() {
  const auto path = scratch() / "corpus.txt";
  if (!fs::exists(path)) {
    GeneratorSpec spec;
    spec.seed = 4;
    spec.start_year = 1965;
    spec.year_count = 50;
    spec.papers_per_year = {8, 12};
    spec.field_count = 24;
    spec.multi_tag_probability = 0.25;
    std::ofstream out(path);
    generate(out, spec, *FieldTaxonomy::default_taxonomy());
  }
  return path.string();
}

// Splits CSV text into metadata lines and comma-separated rows (no quoting in these tables).
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("csv and json writers") {
  MetricReport r("demo", {"name", "value", "count"});
  r.add_row({cell("a,b"), cell(0.1), cell(std::size_t{3})});
  r.add_row({cell("#x"), cell(std::optional<double>{}), cell(-4)});
  r.set_meta("mode", "full");
  r.set_meta("mode", "fractional");
  CHECK_THROWS(r.add_row({cell(1)}));
  std::ostringstream csv;
  write_csv(csv, r);
  CHECK(csv.str() == "# report=demo\n# mode=fractional\nname,value,count\n\"a,b\",0.1,3\n\"#x\",,-4\n");

  std::ostringstream js;
  const std::vector<MetricReport> reports{r};
  write_json(js, reports);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["reports"][0]["name"] == "demo");
  CHECK(j["reports"][0]["rows"][1][1].is_null());
  CHECK(j["reports"][0]["rows"][0][1].get<double>() == 0.1);
  CHECK(j["reports"][0]["metadata"]["mode"] == "fractional");
}

TEST_CASE("validate on the entry fixture") {
  const auto r = run({"validate", fixture("entry.txt")});
  CHECK(r.status == 0);
  CHECK(r.out.find("# records_parsed=1\n") != std::string::npos);
  CHECK(r.out.find("# diagnostics=0\n") != std::string::npos);
  CHECK(r.out.find("# version=" + std::string(cli::kToolVersion)) != std::string::npos);
  CHECK(csv_rows(r.out).size() == 1);
}

TEST_CASE("strict validate surfaces the diagnostic as a JSON error") {
  const auto r = run({"validate", "--strict", fixture("missing_index.txt")});
  CHECK(r.status == 1);
  const auto j = nlohmann::json::parse(r.err);
  CHECK(j["error"]["diagnostic"]["code"] == "missing-index");
  CHECK(j["error"]["diagnostic"]["line"] == 8);
}

TEST_CASE("rank emits one ranked table per window") {
  const auto r = run({"rank", synthetic_corpus(), "--metric", "rdi", "--window", "1970:1980", "--window", "2000:2010"});
  REQUIRE(r.status == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 1 + 48);
  CHECK(rows[0].back() == "rank");
  CHECK(rows[1][0] == "1970");
  CHECK(rows[1][7] == "1");
  CHECK(rows[25][0] == "2000");
  CHECK(rows[25][7] == "1");
  CHECK(r.out.find("# metric=RDI") != std::string::npos);
}

TEST_CASE("acp report matches the library result") {
  const auto path = synthetic_corpus();
  const auto r = run({"acp", path, "--focal", "WWW", "--target", "DM", "--window", "1990:1995", "--format", "json"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& rows = j["reports"][0]["rows"];
  REQUIRE(rows.size() == 2);

  const auto parsed = parse_corpus_file(path, FieldTaxonomy::default_taxonomy());
  const auto g = CitationGraph::build(parsed.corpus);
  const auto& t = parsed.corpus.taxonomy();
  const auto expect = acp_bucket_test(g, parsed.corpus, t.require("WWW"), t.require("DM"), TimeWindow::make(1990, 1995));
  CHECK(rows[0][3].get<double>() == expect.bucket1_pct);
  if (expect.bucket2_acp) CHECK(rows[1][4].get<double>() == *expect.bucket2_acp);
}

TEST_CASE("every subcommand runs and is deterministic") {
  const auto path = synthetic_corpus();
  const std::vector<std::vector<std::string>> commands{
      {"stats", path},
      {"stats", path, "--window", "1980:1990"},
      {"rank", path, "--metric", "kdi", "--keyword-scope", "global", "--log-base", "2"},
      {"impact", path, "--window", "1990:1999", "--share-mode", "hit-rate"},
      {"buckets", path, "--metric", "rdi", "--multiplicity", "fractional"},
      {"reciprocity", path, "--group", "Data Science", "--group", "DB,DM", "--exclude-diagonal"},
      {"trajectory", path, "--field", "DM", "--field", "WWW", "--period", "1975:1980", "--cotag", "WWW"},
      {"evidence", path, "--years", "1970:1975"},
      {"graph", path},
  };
  for (const auto& args : commands) {
    const auto a = run(args);
    INFO(args[0] << " " << a.err);
    CHECK(a.status == 0);
    CHECK(a.err.empty());
    CHECK(run(args).out == a.out);
  }
}

TEST_CASE("numbers round-trip at full precision") {
  const auto r = run({"rank", synthetic_corpus(), "--metric", "rdi", "--format", "json"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto csv = run({"rank", synthetic_corpus(), "--metric", "rdi"});
  const auto rows = csv_rows(csv.out);
  const auto& jrows = j["reports"][0]["rows"];
  REQUIRE(jrows.size() + 1 == rows.size());
  for (std::size_t i = 0; i < jrows.size(); ++i) {
    if (jrows[i][4].is_null()) {
      CHECK(rows[i + 1][4].empty());
    } else {
      CHECK(std::stod(rows[i + 1][4]) == jrows[i][4].get<double>());
    }
  }
}

TEST_CASE("multi-table output goes to sibling files") {
  const auto out = scratch() / "recip.csv";
  fs::remove(scratch() / "recip.pearson.csv");
  const auto r = run({"reciprocity", synthetic_corpus(), "-o", out.string()});
  CHECK(r.status == 0);
  CHECK(fs::exists(out));
  CHECK(fs::exists(scratch() / "recip.pearson.csv"));
}

TEST_CASE("generate subcommand") {
  const auto out = scratch() / "generated.txt";
  const auto r = run({"generate", "--set", "seed=8", "--set", "years=4", "-o", out.string()});
  REQUIRE(r.status == 0);
  const auto parsed = parse_corpus_file(out.string(), FieldTaxonomy::default_taxonomy());
  CHECK(parsed.corpus.size() == 80);
  CHECK(run({"generate", "--set", "colour=red"}).status != 0);
}

TEST_CASE("usage and runtime errors") {
  auto r = run({"frobnicate"});
  CHECK(r.status == 2);
  CHECK(nlohmann::json::parse(r.err)["error"]["code"] == "usage");
  r = run({"rank", synthetic_corpus(), "--metric", "rdi", "--bogus"});
  CHECK(r.status == 2);
  r = run({"stats", (scratch() / "does-not-exist.txt").string()});
  CHECK(r.status == 1);
  CHECK(nlohmann::json::parse(r.err)["error"]["code"] == "io");
  r = run({"acp", synthetic_corpus(), "--focal", "XYZ", "--target", "DM", "--window", "1990:1995"});
  CHECK(r.status != 0);
  r = run({"stats", synthetic_corpus(), "--window", "1995:1990"});
  CHECK(r.status == 2);
  r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("trajectory") != std::string::npos);
}
