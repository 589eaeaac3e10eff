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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orality/document.hpp"
#include "orality/kernels.hpp"
#include "orality/lexicons.hpp"

namespace orality {

using kernels::Execution;

struct VocdParams {
  int n_min = 35;
  int n_max = 50;
  int trials_per_n = 100;
  int fit_runs = 3;
  std::uint64_t rng_seed = 42;
  double d_cap = 1000.0;

  /// Throws PreconditionError for inconsistent parameters or when
  /// token_count < n_max ("too short for voc-D").
  void validate(std::size_t token_count) const;
};

/// Word tokens: at least one letter, otherwise only letters, apostrophes and
/// hyphens. Bytes >= 0x80 count as letters.
bool is_word_token(std::string_view token);

/// Lowercase word tokens of a document in reading order.
std::vector<std::string> word_tokens(const Document& doc);

/// Expected TTR of an N-token sample under the voc-D model,
/// (D/N)(sqrt(1 + 2N/D) - 1), evaluated in a cancellation-free form.
double vocd_model_ttr(double n, double d);

/// Least-squares D for an observed TTR curve; result clamped to [0, d_cap].
double fit_vocd_d(std::span<const double> sample_sizes,
                  std::span<const double> mean_ttr, double d_cap);

/// voc-D: mean over fit_runs of the D fitted to a freshly sampled TTR curve.
/// Deterministic for a given rng_seed, independent of `exec`.
double d_value(std::span<const std::string> tokens, const VocdParams& params,
               Execution exec = Execution::parallel);

struct LexicalRange {
  double lr1 = 0.0;
  double lr2 = 0.0;
  double lr3 = 0.0;
};

/// Shares of tokens in band 1, in band 2 but not band 1, and in the academic
/// list (independent of the bands).
LexicalRange lexical_range(std::span<const std::string> tokens,
                           const Lexicon& band1, const Lexicon& band2,
                           const Lexicon& academic);

/// Sum of ratings of matched tokens / (token count * 100).
double concreteness_index(std::span<const std::string> tokens,
                          const ConcretenessTable& table);

/// Matches of the lexicon, longest entry first, each match consuming its
/// tokens.
std::size_t count_lexicon_matches(std::span<const std::string> tokens,
                                  const Lexicon& lexicon);

/// Deictic matches / article matches. Throws PreconditionError("no articles").
double deictic_article_ratio(std::span<const std::string> tokens,
                             const Lexicon& deictics, const Lexicon& articles);

/// Repetition hits (uni/bi/tri-grams within 2/5/10-token windows) per 1000
/// tokens.
double repetition_per_1000(std::span<const std::string> tokens,
                           Execution exec = Execution::parallel);

double marker_per_1000(std::span<const std::string> tokens,
                       const Lexicon& lexicon);

struct LexicalProfile {
  double d_value = 0.0;
  double lr1 = 0.0;
  double lr2 = 0.0;
  double lr3 = 0.0;
  double concreteness = 0.0;
  double deictic_article_ratio = 0.0;
  double repetition_per_1000 = 0.0;
  double attributive_adj_per_1000 = 0.0;
  double emphatic_per_1000 = 0.0;
};

/// All lexical features at once; throws on the first failed precondition.
LexicalProfile lexical_profile(std::span<const std::string> tokens,
                               const LexiconSet& lexicons,
                               const VocdParams& params);

}  // namespace orality
