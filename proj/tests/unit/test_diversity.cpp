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

#include <cmath>
#include <random>

#include "citeflow/diversity.hpp"
#include "citeflow/error.hpp"
#include "citeflow/synth.hpp"
#include "support.hpp"

using namespace citeflow;
using namespace citeflow::testing;

namespace {

constexpr double kTol = 1e-12;

bool close(double a, double b) { return std::abs(a - b) <= kTol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("entropy of counts") {
  const std::vector<double> one{3, 0, 0};
  CHECK(entropy_of_counts(one, 3) == 0.0);
  const std::vector<double> two{2, 2};
  CHECK(close(entropy_of_counts(two, 4), std::log(2.0)));
}

TEST_CASE("rdi_paper analytic values") {
  const auto c = make_corpus({
      Paper(1).fields({kA}).refs({10, 11, 12}),
      Paper(2).fields({kA}).refs({10, 11, 20, 21}),
      Paper(3).fields({kA}).refs({10, 11, 20}),
      Paper(4).fields({kA}).refs({999}),
      Paper(10).fields({kA}), Paper(11).fields({kA}), Paper(12).fields({kA}),
      Paper(20).fields({kB}), Paper(21).fields({kB}),
  });
  const auto g = CitationGraph::build(c);
  CHECK(*rdi_paper(g, c, 1) == 0.0);
  CHECK(close(*rdi_paper(g, c, 2), 0.693147180559945));
  const double two_one = -(2.0 / 3) * std::log(2.0 / 3) - (1.0 / 3) * std::log(1.0 / 3);
  CHECK(close(*rdi_paper(g, c, 3), two_one));
  CHECK(*rdi_paper(g, c, 3) == doctest::Approx(0.636514).epsilon(1e-6));
  CHECK_FALSE(rdi_paper(g, c, 4));
  CHECK_THROWS_AS(rdi_paper(g, c, 404), Error);
}

TEST_CASE("rdi_field means over papers with references") {
  const auto c = make_corpus({
      Paper(1).fields({kC}).refs({10, 11}),
      Paper(2).fields({kC}).refs({10, 20}),
      Paper(3).fields({kC}),
      Paper(10).fields({kA}).year(1990), Paper(11).fields({kA}).year(1990), Paper(20).fields({kB}).year(1990),
  });
  const auto g = CitationGraph::build(c);
  const auto s = rdi_field(g, c, kC, TimeWindow::make(2000, 2000));
  CHECK(s.coverage == 2);
  CHECK(s.population == 3);
  CHECK(close(*s.value, std::log(2.0) / 2));
  CHECK(*s.value == doctest::Approx(0.346574).epsilon(1e-6));
  // Only zero-reference papers: undefined, not an abort.
  CHECK_FALSE(rdi_field(g, c, kA, TimeWindow::unbounded()).value);
  CHECK_FALSE(rdi_field(g, c, kD, TimeWindow::unbounded()).value);
}

TEST_CASE("kdi_paper analytic values") {
  SUBCASE("single intersecting field") {
    const auto c = make_corpus({Paper(1).fields({kA}).keywords({"x", "y"}), Paper(2).fields({kB}).keywords({"z"})});
    const auto sets = FieldKeywordSets::build(c, TimeWindow::unbounded(), KeywordScope::kWindowLocal);
    CHECK(*kdi_paper(c, sets, 1) == 0.0);
  }
  SUBCASE("x = 1 and x = 0.5") {
    const auto c = make_corpus({Paper(1).fields({kA}).keywords({"x", "y"}), Paper(2).fields({kB}).keywords({"x"})});
    const auto sets = FieldKeywordSets::build(c, TimeWindow::unbounded(), KeywordScope::kWindowLocal);
    CHECK(close(*kdi_paper(c, sets, 1), -0.5 * std::log(0.5)));
    CHECK(*kdi_paper(c, sets, 1) == doctest::Approx(0.346574).epsilon(1e-6));
  }
  SUBCASE("three fields sharing 2, 1, 1 keywords") {
    const auto c = make_corpus({
        Paper(1).fields({kD}).keywords({"k1", "k2", "k3", "k4"}),
        Paper(2).fields({kA}).keywords({"k1", "k2"}),
        Paper(3).fields({kB}).keywords({"k3"}),
        Paper(4).fields({kC}).keywords({"k4"}),
    });
    const auto sets = FieldKeywordSets::build(c, TimeWindow::unbounded(), KeywordScope::kWindowLocal);
    const double expect = -0.5 * std::log(0.5) - 2 * 0.25 * std::log(0.25);
    CHECK(close(*kdi_paper(c, sets, 1), expect));
    CHECK(*kdi_paper(c, sets, 1) == doctest::Approx(1.039721).epsilon(1e-6));
    // Normalized variant: x = (1, .5, .25, .25) / 2.
    const std::vector<double> shares{0.5, 0.25, 0.125, 0.125};
    double h = 0;
    for (double x : shares) h -= x * std::log(x);
    CHECK(close(*kdi_paper(c, sets, 1, true), h));
  }
  SUBCASE("no keywords is undefined") {
    const auto c = make_corpus({Paper(1).fields({kA})});
    const auto sets = FieldKeywordSets::build(c, TimeWindow::unbounded(), KeywordScope::kWindowLocal);
    CHECK_FALSE(kdi_paper(c, sets, 1));
  }
}

TEST_CASE("kdi_field mean and keyword scopes") {
  const auto c = make_corpus({
      Paper(1).fields({kA}).keywords({"x", "y"}),
      Paper(3).fields({kA}).keywords({"w"}),
      Paper(2).fields({kB}).keywords({"x"}),
      Paper(9).fields({kB}).keywords({"w"}).year(1990),
  });
  const auto local = FieldKeywordSets::build(c, TimeWindow::make(2000, 2000), KeywordScope::kWindowLocal);
  const auto s = kdi_field(c, local, kA, TimeWindow::make(2000, 2000));
  CHECK(s.coverage == 2);
  CHECK(close(*s.value, -0.25 * std::log(0.5)));
  CHECK(*s.value == doctest::Approx(0.173287).epsilon(1e-6));

  // The 1990 paper puts "w" into K_B only under the global scope.
  const auto global = FieldKeywordSets::build(c, TimeWindow::make(2000, 2000), KeywordScope::kCorpusGlobal);
  const KeywordId w = 0;
  REQUIRE(c.keyword(w) == "w");
  CHECK(global.contains(kB, w));
  CHECK_FALSE(local.contains(kB, w));
}

TEST_CASE("per-paper values are stable under window growth in global scope") {
  GeneratorSpec spec;
  spec.seed = 5;
  spec.year_count = 10;
  const auto c = generate_corpus(spec, FieldTaxonomy::default_taxonomy());
  const auto sets = FieldKeywordSets::build(c, TimeWindow::make(1980, 1984), KeywordScope::kCorpusGlobal);
  const auto wider = FieldKeywordSets::build(c, TimeWindow::make(1980, 1989), KeywordScope::kCorpusGlobal);
  for (PaperIndex p = 0; p < c.size(); ++p) CHECK(kdi_value(c, sets, p) == kdi_value(c, wider, p));
}

TEST_CASE("rank_fields") {
  SUBCASE("single field ranks first") {
    const auto one = std::make_shared<const FieldTaxonomy>(std::vector<FieldEntry>{{"Only", "O"}});
    const auto c = make_corpus({Paper(1).fields({0}).refs({2}), Paper(2).fields({0})}, one);
    const auto g = CitationGraph::build(c);
    const std::vector<TimeWindow> w{TimeWindow::unbounded()};
    const auto r = rank_fields(g, c, DiversityMetric::kRdi, w);
    REQUIRE(r.size() == 1);
    CHECK(r[0].rows[0].rank == 1u);
  }
  SUBCASE("ties follow field index; undefined rows last") {
    const auto c = make_corpus({
        Paper(1).fields({kC}).refs({10}), Paper(2).fields({kB}).refs({10}), Paper(10).fields({kA}),
    });
    const auto g = CitationGraph::build(c);
    const std::vector<TimeWindow> w{TimeWindow::unbounded()};
    const auto r = rank_fields(g, c, DiversityMetric::kRdi, w);
    REQUIRE(r[0].rows.size() == 4);
    CHECK(r[0].rows[0].field == kB);
    CHECK(r[0].rows[1].field == kC);
    CHECK(r[0].rows[1].rank == 2u);
    CHECK_FALSE(r[0].rows[2].rank);
    CHECK(r[0].rows[2].field == kA);
    CHECK(r[0].rows[3].field == kD);
  }
  SUBCASE("planted cross-field citer outranks in-field citer") {
    GeneratorSpec spec;
    spec.seed = 3;
    spec.field_count = 3;
    spec.year_count = 8;
    spec.propensity = {{0, 0.5, 0.5}, {0, 1, 0}, {0, 0, 1}};
    const auto taxonomy = FieldTaxonomy::default_taxonomy();
    const auto c = generate_corpus(spec, taxonomy);
    const auto g = CitationGraph::build(c);
    const std::vector<TimeWindow> w{TimeWindow::unbounded()};
    const auto r = rank_fields(g, c, DiversityMetric::kRdi, w);
    CHECK(r[0].rows[0].field == 0);
    CHECK(*r[0].rows[0].value > 0.5);
  }
}

TEST_CASE("log base rescales values but not ranks") {
  GeneratorSpec spec;
  spec.seed = 9;
  spec.multi_tag_probability = 0.2;
  const auto c = generate_corpus(spec, FieldTaxonomy::default_taxonomy());
  const auto g = CitationGraph::build(c);
  const std::vector<TimeWindow> w{TimeWindow::make(1980, 1995), TimeWindow::make(1996, 2009)};
  for (auto metric : {DiversityMetric::kRdi, DiversityMetric::kKdi}) {
    DiversityOptions base2;
    base2.log_base = 2.0;
    const auto e = rank_fields(g, c, metric, w);
    const auto two = rank_fields(g, c, metric, w, base2);
    for (std::size_t k = 0; k < w.size(); ++k) {
      for (std::size_t i = 0; i < e[k].rows.size(); ++i) {
        CHECK(e[k].rows[i].field == two[k].rows[i].field);
        CHECK(e[k].rows[i].rank == two[k].rows[i].rank);
        if (e[k].rows[i].value) {
          CHECK(*two[k].rows[i].value == doctest::Approx(*e[k].rows[i].value / std::log(2.0)).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("RDI stays within [0, ln |F|] for single-field targets") {
  GeneratorSpec spec;
  spec.seed = 21;
  const auto c = generate_corpus(spec, FieldTaxonomy::default_taxonomy());
  const auto g = CitationGraph::build(c);
  const double bound = std::log(static_cast<double>(spec.field_count));
  for (const auto& pv : paper_diversity(g, c.full_view(), DiversityMetric::kRdi)) {
    CHECK(pv.value >= 0.0);
    CHECK(pv.value <= bound + 1e-12);
  }
}

TEST_CASE("record order does not change metric values") {
  GeneratorSpec spec;
  spec.seed = 4;
  spec.year_count = 8;
  spec.multi_tag_probability = 0.3;
  const auto taxonomy = FieldTaxonomy::default_taxonomy();
  const auto c = generate_corpus(spec, taxonomy);
  std::vector<PaperRecord> shuffled(c.records().begin(), c.records().end());
  std::mt19937_64 rng(7);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const Corpus d(taxonomy, shuffled);
  const auto g1 = CitationGraph::build(c);
  const auto g2 = CitationGraph::build(d);
  const std::vector<TimeWindow> w{TimeWindow::unbounded()};
  for (auto metric : {DiversityMetric::kRdi, DiversityMetric::kKdi}) {
    const auto a = rank_fields(g1, c, metric, w);
    const auto b = rank_fields(g2, d, metric, w);
    for (std::size_t i = 0; i < a[0].rows.size(); ++i) {
      CHECK(a[0].rows[i].field == b[0].rows[i].field);
      CHECK(a[0].rows[i].value == b[0].rows[i].value);
    }
  }
}

TEST_CASE("ranking report shape") {
  const auto c = make_corpus({Paper(1).fields({kA}).refs({2}), Paper(2).fields({kB}).year(1990)});
  const auto g = CitationGraph::build(c);
  const std::vector<TimeWindow> w{TimeWindow::make(1990, 1999), TimeWindow::make(2000, 2009)};
  const auto r = rank_fields(g, c, DiversityMetric::kRdi, w);
  const auto report = ranking_report(r, DiversityMetric::kRdi, g, c.taxonomy(), {});
  CHECK(report.columns() == std::vector<std::string>{"window_start", "window_end", "field_abbr", "metric",
                                                     "value", "coverage", "mode_flags", "rank"});
  CHECK(report.rows().size() == 2 * c.taxonomy().size());
  CHECK(report.meta("log_base") == "e");
  CHECK(report.meta("multiplicity") == "full");
}
