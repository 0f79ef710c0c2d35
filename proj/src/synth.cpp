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

#include "citeflow/synth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "citeflow/error.hpp"
#include "citeflow/parser.hpp"
#include "citeflow/text.hpp"

namespace citeflow {
namespace {

constexpr int kGeneratorFormat = 1;

// Fixed mappings from raw mt19937_64 output; the std:: distributions are
// implementation-defined and would break cross-platform fixtures.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    while (true) {
      const std::uint64_t x = engine_();
      if (x < limit) return x % n;
    }
  }

  int between(IntRange r) { return r.min + static_cast<int>(below(static_cast<std::uint64_t>(r.max - r.min) + 1)); }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  std::size_t pick(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    const double u = unit() * total;
    double acc = 0.0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      acc += weights[i];
      last = i;
      if (u < acc) return i;
    }
    return last;
  }

 private:
  std::mt19937_64 engine_;
};

[[noreturn]] void bad(const std::string& key, const std::string& value, const std::string& why) {
  throw Error(ErrorCode::kInvalidArgument, "generator spec: " + key + " = '" + value + "': " + why);
}

template <typename T>
T number(const std::string& key, const std::string& value) {
  const auto s = text::trim(value);
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) bad(key, value, "not a number");
  return v;
}

IntRange range(const std::string& key, const std::string& value) {
  const auto colon = value.find(':');
  if (colon == std::string::npos) {
    const int v = number<int>(key, value);
    return {v, v};
  }
  return {number<int>(key, value.substr(0, colon)), number<int>(key, value.substr(colon + 1))};
}

std::string range_text(IntRange r) {
  return r.min == r.max ? std::to_string(r.min) : std::to_string(r.min) + ":" + std::to_string(r.max);
}

FieldIndex field_ref(const std::string& key, const std::string& value, const FieldTaxonomy& taxonomy) {
  if (auto f = taxonomy.find(value)) return *f;
  return number<FieldIndex>(key, value);
}

// Row of citation probabilities for a paper of `field` published in `year`.
std::vector<double> propensity_row(const GeneratorSpec& spec, FieldIndex field, int year) {
  const std::size_t n = spec.field_count;
  std::vector<double> row = spec.propensity.empty() ? std::vector<double>(n, 1.0 / static_cast<double>(n))
                                                    : spec.propensity[field];
  if (!spec.lifecycle || n < 2) return row;
  const auto& life = *spec.lifecycle;
  const double planted = field == life.field ? (year < life.tau_drop_year ? life.self_early : life.self_late)
                                             : (year < life.zeta_rise_year ? life.inbound_early : life.inbound_late);
  double rest = 0.0;
  for (FieldIndex j = 0; j < n; ++j) rest += j == life.field ? 0.0 : row[j];
  for (FieldIndex j = 0; j < n; ++j) {
    if (j == life.field) continue;
    row[j] = rest > 0.0 ? row[j] / rest * (1.0 - planted) : (1.0 - planted) / static_cast<double>(n - 1);
  }
  row[life.field] = planted;
  return row;
}

}  // namespace

std::vector<std::vector<double>> identity_propensity(std::size_t n) {
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

std::vector<std::vector<double>> uniform_propensity(std::size_t n) {
  return std::vector<std::vector<double>>(n, std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::vector<std::vector<double>> offdiagonal_propensity(std::size_t n) {
  if (n < 2) return identity_propensity(n);
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 1.0 / static_cast<double>(n - 1)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 0.0;
  return m;
}

void GeneratorSpec::set(const std::string& raw_key, const std::string& raw_value, const FieldTaxonomy& taxonomy) {
  const std::string key(text::trim(raw_key));
  const std::string value(text::trim(raw_value));
  auto lifecycle_param = [&]() -> PlantedLifecycle& {
    if (!lifecycle) bad(key, value, "set `lifecycle` first");
    return *lifecycle;
  };
  if (key == "seed") {
    seed = number<std::uint64_t>(key, value);
  } else if (key == "fields") {
    field_count = number<std::size_t>(key, value);
  } else if (key == "start_year") {
    start_year = number<int>(key, value);
  } else if (key == "years") {
    year_count = number<int>(key, value);
  } else if (key == "papers_per_year") {
    papers_per_year = range(key, value);
  } else if (key == "references") {
    references = range(key, value);
  } else if (key == "keywords_per_paper") {
    keywords_per_paper = range(key, value);
  } else if (key == "authors_per_paper") {
    authors_per_paper = range(key, value);
  } else if (key == "multi_tag_probability") {
    multi_tag_probability = number<double>(key, value);
  } else if (key == "keyword_pool_size") {
    keyword_pool_size = number<std::size_t>(key, value);
  } else if (key == "keyword_overlap") {
    keyword_overlap = number<double>(key, value);
  } else if (key == "author_pool_size") {
    author_pool_size = number<std::size_t>(key, value);
  } else if (key == "venues_per_field") {
    venues_per_field = number<std::size_t>(key, value);
  } else if (key == "reciprocity_boost") {
    reciprocity_boost = number<double>(key, value);
  } else if (key == "propensity") {
    if (value == "uniform") {
      propensity = uniform_propensity(field_count);
    } else if (value == "identity") {
      propensity = identity_propensity(field_count);
    } else if (value == "offdiag") {
      propensity = offdiagonal_propensity(field_count);
    } else if (value.starts_with("diag:")) {
      const double d = number<double>(key, value.substr(5));
      propensity = identity_propensity(field_count);
      for (std::size_t i = 0; i < field_count; ++i) {
        for (std::size_t j = 0; j < field_count; ++j) {
          propensity[i][j] = i == j ? d : (field_count > 1 ? (1.0 - d) / static_cast<double>(field_count - 1) : 0.0);
        }
      }
    } else {
      propensity.clear();
      for (const auto& row_text : text::split_trimmed(value, ';')) {
        std::vector<double> row;
        std::istringstream in(row_text);
        std::string tok;
        while (in >> tok) row.push_back(number<double>(key, tok));
        propensity.push_back(std::move(row));
      }
    }
  } else if (key == "lifecycle") {
    const auto parts = text::split_trimmed(value, ':');
    if (parts.size() != 3) bad(key, value, "expected FIELD:TAU_DROP_YEAR:ZETA_RISE_YEAR");
    PlantedLifecycle life = lifecycle.value_or(PlantedLifecycle{});
    life.field = field_ref(key, parts[0], taxonomy);
    life.tau_drop_year = number<int>(key, parts[1]);
    life.zeta_rise_year = number<int>(key, parts[2]);
    lifecycle = life;
  } else if (key == "lifecycle_self_early") {
    lifecycle_param().self_early = number<double>(key, value);
  } else if (key == "lifecycle_self_late") {
    lifecycle_param().self_late = number<double>(key, value);
  } else if (key == "lifecycle_inbound_early") {
    lifecycle_param().inbound_early = number<double>(key, value);
  } else if (key == "lifecycle_inbound_late") {
    lifecycle_param().inbound_late = number<double>(key, value);
  } else {
    bad(key, value, "unknown key");
  }
}

GeneratorSpec GeneratorSpec::parse(std::istream& in, const FieldTaxonomy& taxonomy) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const auto body = text::trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument, "generator spec line " + std::to_string(line_no) + ": expected key = value");
    }
    entries.emplace_back(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
  }
  // Presets such as `propensity = identity` depend on the field count.
  auto order = [](const std::pair<std::string, std::string>& e) {
    const auto k = text::trim(e.first);
    return k == "fields" ? 0 : (k.starts_with("lifecycle_") ? 2 : 1);
  };
  std::stable_sort(entries.begin(), entries.end(), [&](const auto& a, const auto& b) { return order(a) < order(b); });
  GeneratorSpec spec;
  for (const auto& [k, v] : entries) spec.set(k, v, taxonomy);
  return spec;
}

GeneratorSpec GeneratorSpec::parse_file(const std::string& path, const FieldTaxonomy& taxonomy) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open generator spec '" + path + "'");
  return parse(in, taxonomy);
}

std::string GeneratorSpec::to_text(const FieldTaxonomy& taxonomy) const {
  std::ostringstream out;
  out << "seed = " << seed << '\n';
  out << "fields = " << field_count << '\n';
  out << "start_year = " << start_year << '\n';
  out << "years = " << year_count << '\n';
  out << "papers_per_year = " << range_text(papers_per_year) << '\n';
  out << "references = " << range_text(references) << '\n';
  out << "keywords_per_paper = " << range_text(keywords_per_paper) << '\n';
  out << "authors_per_paper = " << range_text(authors_per_paper) << '\n';
  out << "multi_tag_probability = " << text::format_double(multi_tag_probability) << '\n';
  out << "keyword_pool_size = " << keyword_pool_size << '\n';
  out << "keyword_overlap = " << text::format_double(keyword_overlap) << '\n';
  out << "author_pool_size = " << author_pool_size << '\n';
  out << "venues_per_field = " << venues_per_field << '\n';
  out << "reciprocity_boost = " << text::format_double(reciprocity_boost) << '\n';
  if (!propensity.empty()) {
    out << "propensity = ";
    for (std::size_t i = 0; i < propensity.size(); ++i) {
      if (i) out << "; ";
      for (std::size_t j = 0; j < propensity[i].size(); ++j) out << (j ? " " : "") << text::format_double(propensity[i][j]);
    }
    out << '\n';
  }
  if (lifecycle) {
    const auto& l = *lifecycle;
    const std::string field = l.field < taxonomy.size() ? taxonomy.abbreviation(l.field) : std::to_string(l.field);
    out << "lifecycle = " << field << ':' << l.tau_drop_year << ':' << l.zeta_rise_year << '\n';
    out << "lifecycle_self_early = " << text::format_double(l.self_early) << '\n';
    out << "lifecycle_self_late = " << text::format_double(l.self_late) << '\n';
    out << "lifecycle_inbound_early = " << text::format_double(l.inbound_early) << '\n';
    out << "lifecycle_inbound_late = " << text::format_double(l.inbound_late) << '\n';
  }
  return out.str();
}

void GeneratorSpec::validate(const FieldTaxonomy& taxonomy) const {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::kInfeasible, "generator spec: " + why); };
  auto probability = [&](const char* name, double p) {
    if (!(p >= 0.0 && p <= 1.0)) fail(std::string(name) + " must lie in [0, 1]");
  };
  auto ordered = [&](const char* name, IntRange r) {
    if (r.min < 0 || r.min > r.max) fail(std::string(name) + " needs 0 <= min <= max");
  };
  if (field_count == 0 || field_count > taxonomy.size()) {
    fail("fields must be between 1 and " + std::to_string(taxonomy.size()));
  }
  if (year_count < 1) fail("years must be positive");
  if (start_year < 1900 || start_year + year_count - 1 > 2100) fail("generated years must stay within 1900-2100");
  ordered("papers_per_year", papers_per_year);
  ordered("references", references);
  ordered("keywords_per_paper", keywords_per_paper);
  ordered("authors_per_paper", authors_per_paper);
  probability("multi_tag_probability", multi_tag_probability);
  probability("keyword_overlap", keyword_overlap);
  if (keywords_per_paper.max > 0 && keyword_pool_size == 0) fail("keyword_pool_size must be positive");
  if (authors_per_paper.max > 0 && author_pool_size == 0) fail("author_pool_size must be positive");
  if (venues_per_field == 0) fail("venues_per_field must be positive");
  if (!(reciprocity_boost >= 0.0)) fail("reciprocity_boost must be non-negative");
  if (!propensity.empty()) {
    if (propensity.size() != field_count) fail("propensity needs one row per field");
    for (const auto& row : propensity) {
      if (row.size() != field_count) fail("propensity rows need one entry per field");
      double total = 0.0;
      for (double p : row) {
        probability("propensity entry", p);
        total += p;
      }
      if (std::abs(total - 1.0) > 1e-9) fail("propensity rows must sum to 1");
    }
  }
  if (lifecycle) {
    const auto& l = *lifecycle;
    if (field_count < 2) fail("a planted lifecycle needs at least 2 fields");
    if (l.field >= field_count) fail("lifecycle field is not among the generated fields");
    probability("lifecycle_self_early", l.self_early);
    probability("lifecycle_self_late", l.self_late);
    probability("lifecycle_inbound_early", l.inbound_early);
    probability("lifecycle_inbound_late", l.inbound_late);
  }
}

void generate(std::ostream& out, const GeneratorSpec& spec, const FieldTaxonomy& taxonomy) {
  spec.validate(taxonomy);
  Rng rng(spec.seed);
  const std::size_t nf = spec.field_count;
  const bool track_refs = spec.reciprocity_boost > 0.0;

  std::vector<std::vector<std::string>> pools(nf);
  const auto shared = static_cast<std::size_t>(std::llround(spec.keyword_overlap * static_cast<double>(spec.keyword_pool_size)));
  for (FieldIndex f = 0; f < nf; ++f) {
    const std::string abbr = text::fold_case(taxonomy.abbreviation(f));
    for (std::size_t k = 0; k < spec.keyword_pool_size; ++k) {
      pools[f].push_back(k < shared ? "shared-" + std::to_string(k) : abbr + "-" + std::to_string(k));
    }
  }

  out << "## citeflow synthetic corpus; generator format " << kGeneratorFormat << "; engine mt19937_64\n";
  {
    std::istringstream echo(spec.to_text(taxonomy));
    std::string line;
    while (std::getline(echo, line)) out << "## " << line << '\n';
  }

  // prior[f]: ids (1-based, dense) of papers from earlier years with primary field f.
  std::vector<std::vector<PaperId>> prior(nf);
  std::vector<FieldIndex> primary_of{0};
  std::vector<std::uint32_t> ref_totals{0};
  std::vector<std::uint32_t> ref_by_field;  // (id) * nf + field, when tracking
  if (track_refs) ref_by_field.assign(nf, 0);
  PaperId next_id = 1;
  bool first_record = true;

  for (int year = spec.start_year; year < spec.start_year + spec.year_count; ++year) {
    const int count = rng.between(spec.papers_per_year);
    std::vector<std::pair<PaperId, FieldIndex>> this_year;
    for (int n = 0; n < count; ++n) {
      PaperRecord r;
      r.id = next_id++;
      r.year = year;
      r.title = "Synthetic study " + std::to_string(r.id);
      const auto primary = static_cast<FieldIndex>(rng.below(nf));
      r.fields.insert(primary);
      if (nf > 1 && rng.chance(spec.multi_tag_probability)) {
        auto extra = static_cast<FieldIndex>(rng.below(nf - 1));
        if (extra >= primary) ++extra;
        r.fields.insert(extra);
      }
      r.venue = taxonomy.abbreviation(primary) + "-V" + std::to_string(rng.below(spec.venues_per_field) + 1);

      const int authors = rng.between(spec.authors_per_paper);
      for (int a = 0; a < authors; ++a) {
        for (int attempt = 0; attempt < 8; ++attempt) {
          std::string name = "Author " + std::to_string(rng.below(spec.author_pool_size) + 1);
          if (std::find(r.authors.begin(), r.authors.end(), name) == r.authors.end()) {
            r.authors.push_back(std::move(name));
            break;
          }
        }
      }

      const auto fields = r.fields.indices();
      const int keywords = rng.between(spec.keywords_per_paper);
      for (int k = 0; k < keywords && spec.keyword_pool_size > 0; ++k) {
        const FieldIndex f = fields[rng.below(fields.size())];
        r.keywords.push_back(pools[f][rng.below(spec.keyword_pool_size)]);
      }
      std::sort(r.keywords.begin(), r.keywords.end());
      r.keywords.erase(std::unique(r.keywords.begin(), r.keywords.end()), r.keywords.end());

      primary_of.push_back(primary);
      ref_totals.push_back(0);
      if (track_refs) ref_by_field.resize(ref_by_field.size() + nf, 0);

      const bool any_prior = std::any_of(prior.begin(), prior.end(), [](const auto& p) { return !p.empty(); });
      const int wanted = any_prior ? rng.between(spec.references) : 0;
      const auto row = propensity_row(spec, primary, year);
      for (int k = 0; k < wanted; ++k) {
        const FieldIndex target = rng.pick(row);
        const auto& pool = prior[target];
        if (pool.empty()) continue;
        for (int attempt = 0; attempt < 8; ++attempt) {
          PaperId cited = pool[rng.below(pool.size())];
          if (track_refs) {
            // Rejection step: weight 1 + boost * share of cited's refs into our field.
            for (int tries = 0; tries < 64; ++tries) {
              const double share = ref_totals[cited] == 0
                                       ? 0.0
                                       : static_cast<double>(ref_by_field[cited * nf + primary]) / ref_totals[cited];
              if (rng.unit() * (1.0 + spec.reciprocity_boost) < 1.0 + spec.reciprocity_boost * share) break;
              cited = pool[rng.below(pool.size())];
            }
          }
          if (std::find(r.references.begin(), r.references.end(), cited) != r.references.end()) continue;
          r.references.push_back(cited);
          ++ref_totals[r.id];
          if (track_refs) ++ref_by_field[r.id * nf + primary_of[cited]];
          break;
        }
      }

      if (!first_record) out << '\n';
      first_record = false;
      write_record(out, r, taxonomy);
      this_year.emplace_back(r.id, primary);
    }
    for (const auto& [id, f] : this_year) prior[f].push_back(id);
  }
}

std::string generate_text(const GeneratorSpec& spec, const FieldTaxonomy& taxonomy) {
  std::ostringstream out;
  generate(out, spec, taxonomy);
  return out.str();
}

Corpus generate_corpus(const GeneratorSpec& spec, std::shared_ptr<const FieldTaxonomy> taxonomy) {
  if (!taxonomy) taxonomy = FieldTaxonomy::default_taxonomy();
  std::istringstream in(generate_text(spec, *taxonomy));
  ParseOptions options;
  options.strictness = Strictness::kStrict;
  return parse_corpus(in, std::move(taxonomy), options).corpus;
}

}  // namespace citeflow
