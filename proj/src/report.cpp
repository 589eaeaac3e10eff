/*
 * Copyright 2026 The Orality Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "orality/report.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <set>

#include "orality/error.hpp"

namespace orality {

namespace {

constexpr std::array<std::string_view, kMetricCount> kMetricNames = {
    "d_value",
    "lr1_share",
    "lr2_share",
    "lr3_share",
    "concreteness_index",
    "deictic_article_ratio",
    "repetitions_per_1000_words",
    "attributive_adjectives_per_1000_words",
    "emphatic_particles_per_1000_words",
    "sentence_length_tokens",
    "subordinate_clauses_per_sentence",
    "relative_clauses_per_sentence",
    "root_distance_tokens",
    "graph_depth_edges",
    "noun_modifiers_per_sentence",
    "present_tense_ratio",
    "past_tense_ratio",
    "participle_gerund_ratio",
    "first_person_pronoun_ratio",
    "additive_connectives_per_1000_words",
    "causal_connectives_per_1000_words",
    "temporal_connectives_per_1000_words",
    "logical_connectives_per_1000_words",
    "weighted_connective_sum",
};

class ReportBuilder {
 public:
  explicit ReportBuilder(MetricsReport& report) : report_(report) {}

  template <typename F>
  void measure(Metric m, F&& compute) {
    try {
      set(m, compute());
    } catch (const PreconditionError& e) {
      absent(m, e.what());
    }
  }
  void set(Metric m, double v) { report_.values[static_cast<std::size_t>(m)] = v; }
  void absent(Metric m, std::string reason) {
    report_.values[static_cast<std::size_t>(m)].reset();
    report_.absent_reasons[static_cast<std::size_t>(m)] = std::move(reason);
  }

 private:
  MetricsReport& report_;
};

}  // namespace

std::string_view metric_name(Metric metric) {
  return kMetricNames[static_cast<std::size_t>(metric)];
}

std::array<Metric, kMetricCount> all_metrics() {
  std::array<Metric, kMetricCount> out{};
  for (std::size_t i = 0; i < kMetricCount; ++i) out[i] = static_cast<Metric>(i);
  return out;
}

bool MetricsReport::complete() const {
  return std::all_of(values.begin(), values.end(),
                     [](const std::optional<double>& v) { return v.has_value(); });
}

MetricsReport analyze_document(const Document& doc, const LexiconSet& lex,
                               const AnalysisOptions& options) {
  MetricsReport report;
  report.id = doc.id;
  report.parse_level = doc.parse_level;
  report.token_count = doc.token_count();
  report.sentence_count = doc.sentences.size();

  const std::vector<std::string> words = word_tokens(doc);
  report.word_count = words.size();
  ReportBuilder b(report);

  b.measure(Metric::d_value, [&] { return d_value(words, options.vocd, options.exec); });
  try {
    LexicalRange range = lexical_range(words, lex.band1, lex.band2, lex.academic);
    b.set(Metric::lr1, range.lr1);
    b.set(Metric::lr2, range.lr2);
    b.set(Metric::lr3, range.lr3);
  } catch (const PreconditionError& e) {
    for (Metric m : {Metric::lr1, Metric::lr2, Metric::lr3}) b.absent(m, e.what());
  }
  b.measure(Metric::concreteness,
            [&] { return concreteness_index(words, lex.concreteness); });
  b.measure(Metric::deictic_article_ratio,
            [&] { return deictic_article_ratio(words, lex.deictics, lex.articles); });
  b.measure(Metric::repetitions_per_1000,
            [&] { return repetition_per_1000(words, options.exec); });
  b.measure(Metric::attributive_adjectives_per_1000,
            [&] { return marker_per_1000(words, lex.attributive_adjectives); });
  b.measure(Metric::emphatic_particles_per_1000,
            [&] { return marker_per_1000(words, lex.emphatic_particles); });

  constexpr std::array kSyntaxMetrics = {
      Metric::sentence_length,  Metric::subordinate_per_sentence,
      Metric::relative_per_sentence, Metric::root_distance,
      Metric::graph_depth,      Metric::nmod_per_sentence};
  constexpr std::array kVerbMetrics = {Metric::present_ratio, Metric::past_ratio,
                                       Metric::participle_ratio,
                                       Metric::first_person_ratio};

  if (doc.parse_level == ParseLevel::full_dependency) {
    try {
      SyntaxProfile s = syntax_profile(doc);
      report.syntax = s;
      b.set(Metric::sentence_length, s.mean_sentence_length);
      b.set(Metric::subordinate_per_sentence, s.subordinate_per_sentence);
      b.set(Metric::relative_per_sentence, s.relative_per_sentence);
      b.set(Metric::root_distance, s.mean_root_distance);
      b.set(Metric::graph_depth, s.mean_graph_depth);
      b.set(Metric::nmod_per_sentence, s.nmod_per_sentence);
    } catch (const PreconditionError& e) {
      for (Metric m : kSyntaxMetrics) b.absent(m, e.what());
    }
    try {
      VerbProfile v = verb_profile(doc, lex.first_person);
      report.verbs = v;
      b.set(Metric::present_ratio, v.present_ratio);
      b.set(Metric::past_ratio, v.past_ratio);
      b.set(Metric::participle_ratio, v.participle_ratio);
      b.set(Metric::first_person_ratio, v.first_person_ratio);
      if (v.pronoun_count == 0) {
        report.warnings.push_back("no pronouns; first-person ratio set to 0");
      }
    } catch (const PreconditionError& e) {
      for (Metric m : kVerbMetrics) b.absent(m, e.what());
    }
  } else {
    for (Metric m : kSyntaxMetrics) b.absent(m, "requires dependency parse");
    for (Metric m : kVerbMetrics) b.absent(m, "requires dependency parse");
  }

  constexpr std::array kConnectiveMetrics = {
      Metric::additive_per_1000, Metric::causal_per_1000,
      Metric::temporal_per_1000, Metric::logical_per_1000,
      Metric::weighted_connective_sum};
  try {
    CohesionProfile c = connective_frequencies(doc, lex.connectives);
    b.set(Metric::additive_per_1000, c.freq_per_1000[ConnectiveClass::additive]);
    b.set(Metric::causal_per_1000, c.freq_per_1000[ConnectiveClass::causal]);
    b.set(Metric::temporal_per_1000, c.freq_per_1000[ConnectiveClass::temporal]);
    b.set(Metric::logical_per_1000, c.freq_per_1000[ConnectiveClass::logical]);
    b.set(Metric::weighted_connective_sum, c.weighted_sum);
    report.cohesion = c;
  } catch (const PreconditionError& e) {
    for (Metric m : kConnectiveMetrics) b.absent(m, e.what());
  }
  return report;
}

std::vector<MetricsReport> analyze_corpus(std::span<const Document> docs,
                                          const LexiconSet& lexicons,
                                          const AnalysisOptions& options,
                                          Execution exec) {
  std::vector<MetricsReport> reports(docs.size());
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < docs.size(); ++i) {
      reports[i] = analyze_document(docs[i], lexicons, options);
    }
    return reports;
  }
  std::vector<std::exception_ptr> errors(docs.size());
  const std::int64_t n = static_cast<std::int64_t>(docs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      reports[k] = analyze_document(docs[k], lexicons, options);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

CorpusSummary aggregate_corpus(std::string name,
                               std::span<const MetricsReport> reports,
                               StdNormalization norm) {
  if (reports.empty()) throw InputError("corpus " + name + ": no documents");
  CorpusSummary summary;
  summary.name = std::move(name);
  summary.document_count = reports.size();

  for (Metric m : all_metrics()) {
    std::vector<double> present;
    for (const MetricsReport& r : reports) {
      if (r.value(m)) present.push_back(*r.value(m));
    }
    MetricStat& st = summary.stats[static_cast<std::size_t>(m)];
    st.n = present.size();
    if (present.empty()) continue;
    st.mean = std::accumulate(present.begin(), present.end(), 0.0) /
              static_cast<double>(present.size());
    if (present.size() >= 2) st.sd = standard_deviation(present, StdNormalization::sample);
  }

  std::vector<CohesionProfile> profiles;
  for (const MetricsReport& r : reports) {
    if (r.cohesion) profiles.push_back(*r.cohesion);
  }
  if (!profiles.empty()) summary.pooled_connectives = pool_profiles(profiles);
  try {
    summary.cohesion = corpus_cohesion(profiles, norm);
  } catch (const PreconditionError& e) {
    summary.cohesion_note = e.what();
  }
  return summary;
}

ComparisonReport compare(std::span<const NamedCorpus> corpora,
                         const CompareOptions& options) {
  ComparisonReport out;
  std::set<std::string> names;
  auto add_row = [&](const std::string& name,
                     const std::vector<MetricsReport>& reports) {
    if (!names.insert(name).second) throw InputError("duplicate corpus name " + name);
    out.corpora.push_back(aggregate_corpus(name, reports, options.norm));
  };
  for (const NamedCorpus& c : corpora) {
    add_row(c.name, c.reports);
    if (c.gm_reports.has_value() != c.pc_reports.has_value()) {
      throw InputError("corpus " + c.name + ": role split needs both sides");
    }
    if (c.gm_reports) {
      add_row(c.name + "-DM", *c.gm_reports);
      add_row(c.name + "-PC", *c.pc_reports);
    }
  }
  if (out.corpora.size() < 2) throw InputError("compare needs at least two corpora");

  if (options.correlate) {
    const std::size_t n = out.corpora.size();
    std::vector<std::vector<std::optional<double>>> matrix(
        n, std::vector<std::optional<double>>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& a = out.corpora[i].pooled_connectives;
        const auto& b = out.corpora[j].pooled_connectives;
        if (!a || !b) continue;
        try {
          matrix[i][j] = connective_correlation(a->freq_per_1000.per_1000,
                                                b->freq_per_1000.per_1000);
        } catch (const InputError&) {
          // zero variance: leave the cell empty
        }
      }
    }
    out.correlations = std::move(matrix);
  }
  return out;
}

}  // namespace orality
