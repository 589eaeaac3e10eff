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

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orality/cohesion.hpp"
#include "orality/document.hpp"
#include "orality/kernels.hpp"
#include "orality/lexical_metrics.hpp"
#include "orality/lexicons.hpp"
#include "orality/syntax_metrics.hpp"

namespace orality {

/// Row order of every report and table. Names carry their units.
enum class Metric : std::size_t {
  d_value,
  lr1,
  lr2,
  lr3,
  concreteness,
  deictic_article_ratio,
  repetitions_per_1000,
  attributive_adjectives_per_1000,
  emphatic_particles_per_1000,
  sentence_length,
  subordinate_per_sentence,
  relative_per_sentence,
  root_distance,
  graph_depth,
  nmod_per_sentence,
  present_ratio,
  past_ratio,
  participle_ratio,
  first_person_ratio,
  additive_per_1000,
  causal_per_1000,
  temporal_per_1000,
  logical_per_1000,
  weighted_connective_sum,
};

inline constexpr std::size_t kMetricCount = 24;

std::string_view metric_name(Metric metric);
std::array<Metric, kMetricCount> all_metrics();

struct MetricsReport {
  std::string id;
  ParseLevel parse_level = ParseLevel::plain;
  std::size_t token_count = 0;
  std::size_t word_count = 0;
  std::size_t sentence_count = 0;

  std::array<std::optional<double>, kMetricCount> values{};
  std::array<std::string, kMetricCount> absent_reasons{};

  // Present iff parse_level is full-dependency.
  std::optional<SyntaxProfile> syntax;
  std::optional<VerbProfile> verbs;
  std::optional<CohesionProfile> cohesion;
  std::vector<std::string> warnings;

  const std::optional<double>& value(Metric m) const {
    return values[static_cast<std::size_t>(m)];
  }
  const std::string& absent_reason(Metric m) const {
    return absent_reasons[static_cast<std::size_t>(m)];
  }
  bool complete() const;
};

struct AnalysisOptions {
  VocdParams vocd;
  Execution exec = Execution::parallel;
};

/// Every applicable metric, each computed once. Precondition failures become
/// absent values with a reason rather than errors.
MetricsReport analyze_document(const Document& doc, const LexiconSet& lexicons,
                               const AnalysisOptions& options = {});

/// analyze_document over many documents; the parallel path spreads documents
/// over OpenMP threads. Output order follows input order.
std::vector<MetricsReport> analyze_corpus(std::span<const Document> docs,
                                          const LexiconSet& lexicons,
                                          const AnalysisOptions& options = {},
                                          Execution exec = Execution::parallel);

struct MetricStat {
  std::optional<double> mean;
  std::optional<double> sd;  // sample sd, present when n >= 2
  std::size_t n = 0;
};

struct CorpusSummary {
  std::string name;
  std::size_t document_count = 0;
  std::array<MetricStat, kMetricCount> stats{};
  std::optional<CohesionProfile> pooled_connectives;
  std::optional<CorpusCohesion> cohesion;
  std::string cohesion_note;

  const MetricStat& stat(Metric m) const { return stats[static_cast<std::size_t>(m)]; }
};

/// Means and sds over present values; corpus cohesion from the per-document
/// connective profiles when there are at least two. Throws InputError on an
/// empty report list.
CorpusSummary aggregate_corpus(std::string name,
                               std::span<const MetricsReport> reports,
                               StdNormalization norm = StdNormalization::sample);

struct NamedCorpus {
  std::string name;
  std::vector<MetricsReport> reports;
  // Reports of the GM-only and player-only documents, when split.
  std::optional<std::vector<MetricsReport>> gm_reports;
  std::optional<std::vector<MetricsReport>> pc_reports;
};

struct CompareOptions {
  bool correlate = false;
  StdNormalization norm = StdNormalization::sample;
};

struct ComparisonReport {
  std::vector<CorpusSummary> corpora;
  // correlations[i][j]: Pearson of pooled class frequencies of rows i and j.
  std::optional<std::vector<std::vector<std::optional<double>>>> correlations;
};

/// One row per corpus, followed by NAME-DM and NAME-PC rows for split
/// corpora. Needs at least two rows and unique names.
ComparisonReport compare(std::span<const NamedCorpus> corpora,
                         const CompareOptions& options = {});

}  // namespace orality
