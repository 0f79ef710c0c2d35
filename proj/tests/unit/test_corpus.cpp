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

#include <fstream>
#include <sstream>

#include "citeflow/error.hpp"
#include "citeflow/parser.hpp"
#include "citeflow/stats.hpp"
#include "citeflow/text.hpp"
#include "support.hpp"

using namespace citeflow;
using citeflow::testing::abc_taxonomy;
using citeflow::testing::Paper;

namespace {

ParseResult parse_text(const std::string& text, Strictness s = Strictness::kLenient,
                       std::shared_ptr<const FieldTaxonomy> taxonomy = FieldTaxonomy::default_taxonomy()) {
  std::istringstream in(text);
  ParseOptions o;
  o.strictness = s;
  return parse_corpus(in, std::move(taxonomy), o);
}

std::string fixture(const std::string& name) { return std::string(CITEFLOW_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("text helpers") {
  CHECK(text::trim("  a b \t") == "a b");
  CHECK(text::normalize_keyword("  Table   Lookup ") == "table lookup");
  CHECK(text::split_trimmed(" a, ,b ,", ',') == std::vector<std::string>{"a", "b"});
  CHECK(text::iequals("ALGO", "Algo"));
  CHECK_FALSE(text::iequals("ALGO", "ALG"));
  CHECK(text::format_double(0.1) == "0.1");
  CHECK(std::stod(text::format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("default taxonomy has the 24 fields") {
  const auto t = FieldTaxonomy::default_taxonomy();
  REQUIRE(t->size() == 24);
  CHECK(t->name(0) == "Artificial Intelligence");
  CHECK(t->abbreviation(0) == "AI");
  CHECK(t->require("Computer Architecture") == t->require("ARC"));
  CHECK(t->require("algo") == t->require("Algorithm"));
  CHECK(t->abbreviation(t->require("World Wide Web")) == "WWW");
  CHECK(t->abbreviation(23) == "SIM");
  CHECK_FALSE(t->find("Astrophysics"));
  CHECK_THROWS_AS(t->require("Astrophysics"), Error);
  for (FieldIndex i = 0; i < t->size(); ++i) {
    CHECK(t->find(t->name(i)) == i);
    CHECK(t->find(t->abbreviation(i)) == i);
  }
}

TEST_CASE("taxonomy file loading") {
  std::istringstream in("# comment\nAlpha\tA\n\nBeta\tB\n!venue\tJ1\tjournal\n");
  const auto t = FieldTaxonomy::load(in);
  CHECK(t.size() == 2);
  CHECK(t.require("beta") == 1);
  CHECK(t.venue_kind("J1") == VenueKind::kJournal);
  CHECK(t.venue_kind("other") == VenueKind::kUnknown);

  std::istringstream dup("Alpha\tA\nAlpha again\tA\n");
  CHECK_THROWS_AS(FieldTaxonomy::load(dup), Error);
  std::istringstream bad("no tab here\n");
  CHECK_THROWS_AS(FieldTaxonomy::load(bad), Error);
}

TEST_CASE("golden entry record parses to the listed values") {
  const auto result = parse_corpus_file(fixture("entry.txt"), FieldTaxonomy::default_taxonomy());
  REQUIRE(result.corpus.size() == 1);
  CHECK(result.report.records_parsed == 1);
  CHECK(result.report.diagnostics.empty());
  const auto& r = result.corpus.record(0);
  CHECK(r.id == 134672);
  CHECK(r.year == 2007);
  CHECK(r.venue == "DAC");
  CHECK(r.title == "GlitchMap: An FPGA Technology Mapper for Low Power Considering Glitches.");
  CHECK(r.authors == std::vector<std::string>{"Lei Cheng", "Deming Chen", "Martin D. F. Wong"});
  CHECK(r.fields == FieldSet::of(result.corpus.taxonomy().require("Computer Architecture")));
  CHECK(r.keywords.size() == 10);
  CHECK(std::binary_search(r.keywords.begin(), r.keywords.end(), std::string("table lookup")));
  CHECK(r.references == std::vector<PaperId>{233644, 759, 283365, 215199, 282586, 214457, 132100, 281965, 281805});
  CHECK(r.abstract.rfind("In 90-nm technology", 0) == 0);
}

TEST_CASE("round trip is canonical and byte-stable") {
  const auto first = parse_corpus_file(fixture("entry.txt"), FieldTaxonomy::default_taxonomy());
  const auto text1 = serialize(first.corpus);
  const auto second = parse_text(text1, Strictness::kStrict);
  CHECK(serialize(second.corpus) == text1);
  CHECK(second.corpus.record(0) == first.corpus.record(0));
}

TEST_CASE("empty input yields an empty corpus") {
  const auto r = parse_text("");
  CHECK(r.corpus.empty());
  CHECK(r.report.records_parsed == 0);
  CHECK(r.report.blocks == 0);
  CHECK(r.report.diagnostics.empty());
  CHECK(parse_text("\n\n  \n").corpus.empty());
}

TEST_CASE("record missing #index: lenient skips, strict aborts") {
  const auto taxonomy = FieldTaxonomy::default_taxonomy();
  const auto lenient = parse_corpus_file(fixture("missing_index.txt"), taxonomy);
  CHECK(lenient.corpus.size() == 2);
  CHECK(lenient.report.records_skipped == 1);
  CHECK(lenient.report.blocks == 3);
  REQUIRE(lenient.report.diagnostics.size() == 1);
  const auto& d = lenient.report.diagnostics[0];
  CHECK(d.code == "missing-index");
  CHECK(d.record == 2);
  CHECK(d.line == 8);
  CHECK(d.severity == Severity::kError);

  ParseOptions strict;
  strict.strictness = Strictness::kStrict;
  try {
    parse_corpus_file(fixture("missing_index.txt"), taxonomy, strict);
    FAIL("strict parse should throw");
  } catch (const ParseError& e) {
    CHECK(e.diagnostic().code == "missing-index");
    CHECK(e.code() == ErrorCode::kParse);
  }
}

TEST_CASE("parser error paths") {
  SUBCASE("malformed year") {
    const auto r = parse_text("#*t\n#t20x7\n#fDatabases\n#index1\n");
    CHECK(r.corpus.empty());
    CHECK(r.report.records_skipped == 1);
    CHECK(r.report.diagnostics.at(0).code == "bad-year");
    CHECK_THROWS_AS(parse_text("#*t\n#t20x7\n#fDatabases\n#index1\n", Strictness::kStrict), ParseError);
  }
  SUBCASE("year outside the sane range") {
    const auto r = parse_text("#t1850\n#fDatabases\n#index1\n");
    CHECK(r.corpus.empty());
    CHECK(r.report.diagnostics.at(0).code == "year-range");
  }
  SUBCASE("duplicate id keeps the first") {
    const auto r = parse_text("#t2000\n#fDatabases\n#index1\n\n#t2001\n#fDatabases\n#index1\n");
    CHECK(r.corpus.size() == 1);
    CHECK(r.corpus.record(0).year == 2000);
    CHECK(r.report.diagnostics.at(0).code == "duplicate-id");
    CHECK(r.report.diagnostics.at(0).record == 2);
  }
  SUBCASE("unknown field label dropped in lenient mode") {
    const auto r = parse_text("#t2000\n#fDatabases, Astrology\n#index1\n");
    REQUIRE(r.corpus.size() == 1);
    CHECK(r.report.fields_dropped == 1);
    CHECK(r.corpus.record(0).fields.size() == 1);
    CHECK_THROWS_AS(parse_text("#t2000\n#fDatabases, Astrology\n#index1\n", Strictness::kStrict), ParseError);
  }
  SUBCASE("only unknown labels skips the record") {
    const auto r = parse_text("#t2000\n#fAstrology\n#index1\n");
    CHECK(r.corpus.empty());
    CHECK(r.report.records_skipped == 1);
  }
  SUBCASE("no #f line") {
    const auto r = parse_text("#t2000\n#index1\n");
    CHECK(r.corpus.empty());
    CHECK(r.report.diagnostics.at(0).code == "missing-field");
    CHECK_THROWS_AS(parse_text("#t2000\n#index1\n", Strictness::kStrict), ParseError);
  }
  SUBCASE("references: duplicates and self references dropped with warnings") {
    const auto r = parse_text("#t2000\n#fDatabases\n#index5\n#%7\n#%7\n#%5\n#%8\n");
    REQUIRE(r.corpus.size() == 1);
    CHECK(r.corpus.record(0).references == std::vector<PaperId>{7, 8});
    CHECK(r.report.count(Severity::kWarning) == 2);
    CHECK(r.report.count(Severity::kError) == 0);
  }
}

TEST_CASE("multi-field encodings and author/keyword normalization") {
  const auto repeated = parse_text("#@ A. Smith , ,B. Jones\n#t2000\n#fDatabases\n#fData Mining\n#kGraph  Mining, graph mining,  Trees\n#index1\n");
  const auto single = parse_text("#@A. Smith,B. Jones\n#t2000\n#fDatabases, DM\n#kgraph mining, trees\n#index1\n");
  REQUIRE(repeated.corpus.size() == 1);
  REQUIRE(single.corpus.size() == 1);
  const auto& a = repeated.corpus.record(0);
  const auto& b = single.corpus.record(0);
  CHECK(a.fields == b.fields);
  CHECK(a.fields.size() == 2);
  CHECK(a.authors == std::vector<std::string>{"A. Smith", "B. Jones"});
  CHECK(a.keywords == std::vector<std::string>{"graph mining", "trees"});
  CHECK(a.keywords == b.keywords);
}

TEST_CASE("parser totals: parsed + skipped = blocks") {
  const std::string text =
      "#t2000\n#fAI\n#index1\n\n\n#tbad\n#fAI\n#index2\n\n#t2001\n#fAI\n#index3\n\n#t2001\n#fAI\n\n## comment\n#t2002\n#fAI\n#index4\n";
  const auto r = parse_text(text);
  CHECK(r.report.blocks == 5);
  CHECK(r.report.records_parsed + r.report.records_skipped == r.report.blocks);
  CHECK(r.corpus.size() == 3);
}

TEST_CASE("corpus validation") {
  using citeflow::testing::make_corpus;
  CHECK_THROWS_AS(make_corpus({Paper(1).fields({0}), Paper(1).fields({0})}), Error);
  CHECK_THROWS_AS(make_corpus({Paper(1)}), Error);
  CHECK_THROWS_AS(make_corpus({Paper(1).fields({0}).refs({1})}), Error);
  CHECK_THROWS_AS(make_corpus({Paper(1).fields({9})}), Error);
  const auto c = make_corpus({Paper(5).fields({0, 1}), Paper(2).fields({1}).year(1999)});
  CHECK(c.record(0).id == 2);
  CHECK(c.index_of(5) == 1);
  CHECK_THROWS_AS(c.index_of(42), Error);
  // A paper tagged with k fields sits in exactly k field partitions.
  CHECK(c.field_papers(0).size() == 1);
  CHECK(c.field_papers(1).size() == 2);
  std::size_t by_year = 0;
  for (const auto& [y, ps] : c.by_year()) by_year += ps.size();
  CHECK(by_year == c.size());
}

TEST_CASE("window views") {
  const auto entry = parse_corpus_file(fixture("entry.txt"), FieldTaxonomy::default_taxonomy()).corpus;
  CHECK(entry.view(TimeWindow::make(2007, 2007)).size() == 1);
  CHECK(entry.view(TimeWindow::make(1900, 2100)).size() == entry.size());
  CHECK(entry.view(TimeWindow::make(1800, 1801)).empty());
  CHECK_THROWS_AS(TimeWindow::make(2001, 2000), Error);
  CHECK(TimeWindow::parse("1970:1980") == TimeWindow{1970, 1980});
  CHECK(TimeWindow::parse("1999") == TimeWindow{1999, 1999});
  CHECK_THROWS_AS(TimeWindow::parse("1980:"), Error);

  using citeflow::testing::make_corpus;
  const auto c = make_corpus({Paper(1).fields({0}).year(1990), Paper(2).fields({0, 1}).year(1995),
                              Paper(3).fields({1}).year(2000)});
  const auto v = c.view(TimeWindow::make(1991, 2000));
  CHECK(v.size() == 2);
  CHECK(v.field_papers(0).size() == 1);
  CHECK(v.field_papers(1).size() == 2);
  CHECK_FALSE(v.contains(0));
}

TEST_CASE("corpus stats") {
  using citeflow::testing::make_corpus;
  std::vector<PaperRecord> records;
  for (PaperId id = 1; id <= 10; ++id) {
    Paper p(id);
    p.fields({0});
    if (id == 4) p.fields({1});
    records.push_back(p);
  }
  const auto c = make_corpus(records);
  const auto s = compute_stats(c.full_view());
  CHECK(s.records == 10);
  CHECK(s.multi_field_fraction == doctest::Approx(0.10).epsilon(1e-15));
  CHECK(s.field_papers[0] == 10);
  CHECK(s.field_papers[1] == 1);

  const auto single = make_corpus({Paper(1).fields({2})});
  const auto report = corpus_stats(single.full_view());
  CHECK(std::get<std::int64_t>(report.at(2, "papers")) == 1);
  CHECK(report.meta("multi_field_fraction") == "0");

  const auto empty = make_corpus({});
  CHECK_THROWS_AS(compute_stats(empty.full_view()), Error);
}
