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

#include "citeflow/diversity.hpp"
#include "citeflow/error.hpp"
#include "citeflow/impact.hpp"
#include "citeflow/synth.hpp"
#include "support.hpp"

using namespace citeflow;
using namespace citeflow::testing;

TEST_CASE("cp counts in-horizon citations minus first-author self citations") {
  const auto c = make_corpus({
      Paper(1).fields({kA}).year(2000).authors({"A. Smith"}),
      Paper(2).fields({kA}).year(2001).authors({"B"}).refs({1}),
      Paper(3).fields({kA}).year(2002).authors({"C"}).refs({1}),
      Paper(4).fields({kA}).year(2003).authors({"A. Smith"}).refs({1}),
      Paper(5).fields({kA}).year(2010).authors({"D"}).refs({1}),
      Paper(6).fields({kA}).year(2010).authors({"D"}),
  });
  const auto g = CitationGraph::build(c);
  CHECK(cp(g, c, 6) == 0);
  CHECK(cp(g, c, 1) == 2);
  ImpactOptions keep;
  keep.exclude_first_author_self = false;
  CHECK(cp(g, c, 1, keep) == 3);
  CHECK_THROWS_AS(cp(g, c, 100), Error);
}

TEST_CASE("cp is monotone in the horizon") {
  GeneratorSpec spec;
  spec.seed = 17;
  spec.year_count = 15;
  const auto c = generate_corpus(spec, FieldTaxonomy::default_taxonomy());
  const auto g = CitationGraph::build(c);
  for (PaperIndex p = 0; p < c.size(); p += 7) {
    std::size_t prev = 0;
    for (int h = 1; h <= 12; ++h) {
      ImpactOptions o;
      o.horizon_years = h;
      const auto v = cp(g, c, c.record(p).id, o);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("corpus-derived two-year impact factor") {
  const auto c = make_corpus({
      Paper(1).fields({kA}).year(1999).venue("V"),
      Paper(2).fields({kA}).year(1998).venue("V"),
      Paper(3).fields({kA}).year(2000).refs({1, 2}),
      Paper(4).fields({kA}).year(2000).refs({1, 2}),
      Paper(5).fields({kA}).year(2000).refs({1}),
      Paper(6).fields({kA}).year(2000).refs({2}),
      Paper(7).fields({kA}).year(2001).refs({2}),
  });
  const auto g = CitationGraph::build(c);
  CHECK(*jif(c, g, "V", 2000) == 3.0);
  CHECK_FALSE(jif(c, g, "V", 1990));
  CHECK_FALSE(jif(c, g, "Nowhere", 2000));
  CHECK(*jif(c, g, "V", 1999) == 0.0);
  // 2001: papers from 1999 and 2000 with venue V -> only paper 1, no citations from 2001.
  CHECK(*jif(c, g, "V", 2001) == 0.0);
}

TEST_CASE("top set: ceil(f N) with ties included") {
  std::vector<std::size_t> keys(100, 0);
  for (std::size_t i = 0; i < 5; ++i) keys[i] = 50 - i;
  auto top = mark_top(keys, 0.05);
  CHECK(std::count(top.begin(), top.end(), true) == 5);

  // Tie spanning rank 5 of 100.
  keys.assign(100, 0);
  keys[0] = 10; keys[1] = 9; keys[2] = 8; keys[3] = 7;
  keys[4] = 6; keys[5] = 6; keys[6] = 6;
  top = mark_top(keys, 0.05);
  CHECK(std::count(top.begin(), top.end(), true) == 7);
  CHECK(top[6]);
  CHECK_FALSE(top[7]);

  // Never fewer than ceil(f N).
  keys.assign(41, 3);
  top = mark_top(keys, 0.05);
  CHECK(std::count(top.begin(), top.end(), true) == 41);
}

TEST_CASE("top-cited share and hit rate") {
  std::vector<PaperRecord> records;
  for (PaperId id = 1; id <= 100; ++id) records.push_back(Paper(id).fields({id <= 10 ? kA : kB}));
  const auto c = make_corpus(records);
  std::vector<PaperImpact> rows;
  for (PaperIndex p = 0; p < 100; ++p) {
    PaperImpact r;
    r.paper = p;
    r.top_cited = p < 5;
    r.cp = r.ranking_key = p < 5 ? 10 : 0;
    rows.push_back(r);
  }
  const ImpactScores scores(rows, {});
  const auto w = TimeWindow::unbounded();
  const auto a = top_cited_share(scores, c, kA, w);
  CHECK(*a.fraction == 1.0);
  CHECK(a.numerator == 5);
  CHECK(a.denominator == 5);
  CHECK(*top_cited_share(scores, c, kB, w).fraction == 0.0);
  const auto hit = top_cited_share(scores, c, kA, w, ShareMode::kHitRate);
  CHECK(*hit.fraction == 0.5);
  CHECK(hit.denominator == 10);
  CHECK_FALSE(top_cited_share(scores, c, kC, w, ShareMode::kHitRate).fraction);
  CHECK_THROWS_AS(top_cited_share(scores, c, kA, TimeWindow::make(1800, 1801)), Error);
}

TEST_CASE("compute_impact marks at least ceil(5%) papers") {
  GeneratorSpec spec;
  spec.seed = 8;
  const auto c = generate_corpus(spec, FieldTaxonomy::default_taxonomy());
  const auto g = CitationGraph::build(c);
  const auto scores = compute_impact(g, c.full_view());
  CHECK(scores.rows().size() == c.size());
  CHECK(scores.top_count() >= static_cast<std::size_t>(std::ceil(0.05 * static_cast<double>(c.size()))));
  for (const auto& r : scores.rows()) {
    CHECK(r.cp == cp(g, c, c.record(r.paper).id));
    CHECK(r.top_cited == (r.ranking_key >= scores.top_threshold()));
  }
}

TEST_CASE("bucket boundaries") {
  CHECK(bucket_of(0.0, 0.0, 1.0, 5) == 0);
  CHECK(bucket_of(0.2, 0.0, 1.0, 5) == 1);
  CHECK(bucket_of(0.25, 0.0, 1.0, 5) == 1);
  CHECK(bucket_of(0.5, 0.0, 1.0, 5) == 2);
  CHECK(bucket_of(0.6, 0.0, 1.0, 5) == 3);
  CHECK(bucket_of(1.0, 0.0, 1.0, 5) == 4);
  CHECK(bucket_of(0.3, 0.3, 0.3, 5) == 0);
}

TEST_CASE("bucket_impact") {
  std::vector<PaperRecord> records;
  for (PaperId id = 1; id <= 6; ++id) records.push_back(Paper(id).fields({kA}));
  const auto c = make_corpus(records);
  std::vector<PaperImpact> rows;
  for (PaperIndex p = 0; p < 6; ++p) {
    PaperImpact r;
    r.paper = p;
    r.cp = r.ranking_key = p;
    if (p % 2 == 0) r.jif = 1.0 + p;
    r.top_cited = p == 5;
    rows.push_back(r);
  }
  const ImpactScores scores(rows, {});

  SUBCASE("one paper per bucket for evenly spaced values") {
    const std::vector<PaperValue> values{{0, 0.0}, {1, 0.25}, {2, 0.5}, {3, 0.75}, {4, 1.0}};
    const auto a = bucket_impact(values, scores);
    REQUIRE(a.buckets.size() == 5);
    CHECK_FALSE(a.degenerate);
    for (std::size_t b = 0; b < 5; ++b) {
      CHECK(a.buckets[b].count == 1);
      CHECK(a.assignment[b] == b);
    }
    CHECK(a.buckets[1].lo == 0.2);
    CHECK(*a.buckets[1].mean_cp == 1.0);
    CHECK_FALSE(a.buckets[1].mean_jif);
    CHECK(*a.buckets[2].mean_jif == 3.0);
  }
  SUBCASE("identical values give one degenerate bucket") {
    const std::vector<PaperValue> values{{0, 0.4}, {1, 0.4}, {5, 0.4}};
    const auto a = bucket_impact(values, scores);
    CHECK(a.degenerate);
    REQUIRE(a.buckets.size() == 1);
    CHECK(a.buckets[0].count == 3);
    CHECK(*a.buckets[0].top_cited_share == doctest::Approx(1.0 / 3));
    CHECK(bucket_report(a).meta("degenerate") == "true");
  }
  SUBCASE("empty buckets report missing means") {
    const std::vector<PaperValue> values{{0, 0.0}, {1, 1.0}};
    const auto a = bucket_impact(values, scores);
    CHECK(a.buckets[2].count == 0);
    CHECK_FALSE(a.buckets[2].mean_cp);
    const auto report = bucket_report(a);
    CHECK(report.columns() == std::vector<std::string>{"bucket_index", "bucket_lo", "bucket_hi", "count",
                                                       "mean_cp", "mean_jif", "top_cited_share"});
    CHECK(std::holds_alternative<std::monostate>(report.at(2, "mean_cp")));
  }
  CHECK_THROWS_AS(bucket_impact(std::vector<PaperValue>{}, scores), Error);
}

TEST_CASE("bucket assignment is invariant to positive scaling") {
  GeneratorSpec spec;
  spec.seed = 13;
  spec.multi_tag_probability = 0.2;
  const auto c = generate_corpus(spec, FieldTaxonomy::default_taxonomy());
  const auto g = CitationGraph::build(c);
  const auto scores = compute_impact(g, c.full_view());
  auto values = paper_diversity(g, c.full_view(), DiversityMetric::kRdi);
  const auto base = bucket_impact(values, scores);
  std::size_t total = 0;
  for (const auto& b : base.buckets) total += b.count;
  CHECK(total == values.size());
  for (double s : {1.0 / std::log(2.0), 3.7, 1e-3, 1e6}) {
    auto scaled = values;
    for (auto& v : scaled) v.value *= s;
    CHECK(bucket_impact(scaled, scores).assignment == base.assignment);
  }
}
