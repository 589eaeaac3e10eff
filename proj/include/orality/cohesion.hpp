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
#include <span>
#include <string>
#include <vector>

#include "orality/document.hpp"
#include "orality/lexicons.hpp"

namespace orality {

/// Per-1000-word frequency of each connective class.
struct ClassFrequencies {
  std::array<double, 4> per_1000{};

  double& operator[](ConnectiveClass cls) {
    return per_1000[static_cast<std::size_t>(cls)];
  }
  double operator[](ConnectiveClass cls) const {
    return per_1000[static_cast<std::size_t>(cls)];
  }
};

/// causal 2.0, logical 1.5, additive 1.5, temporal 1.0
double class_weight(ConnectiveClass cls);

/// Weighted sum of class frequencies. Throws InputError on a negative entry.
double weighted_sum(const ClassFrequencies& freqs);

struct CohesionProfile {
  ClassFrequencies freq_per_1000;
  double weighted_sum = 0.0;
  // Matches per class; a match belonging to several classes counts for each.
  std::array<std::size_t, 4> class_counts{};
  // Matches per (class, polarity); reported only, not weighted.
  std::array<std::array<std::size_t, 2>, 4> polarity_counts{};
  std::size_t token_count = 0;
};

/// Longest-match scan of each sentence's word tokens. A match increments
/// every class it belongs to. Throws PreconditionError when the document has
/// no word tokens.
CohesionProfile connective_frequencies(const Document& doc,
                                       const ConnectiveLexicon& lexicon);

/// Same scan over pre-tokenized sentences (lowercase word tokens).
CohesionProfile connective_frequencies(
    std::span<const std::vector<std::string>> sentences,
    const ConnectiveLexicon& lexicon);

/// ln(std_dev) / ln(weighted_sum): the log of the spread in the base of the
/// weighted sum. Throws PreconditionError("degenerate base") for
/// weighted_sum <= 1 and ("degenerate spread") for std_dev <= 0.
double cohesion_value(double weighted_sum, double std_dev);

enum class StdNormalization { sample, population };

struct CorpusCohesion {
  CohesionProfile aggregate;
  std::vector<double> per_doc_sums;
  double std_dev = 0.0;
  double cohesion_value = 0.0;
};

/// Aggregate frequencies over all documents pooled (the base) and the spread
/// of per-document weighted sums. Requires at least two documents.
CorpusCohesion corpus_cohesion(std::span<const CohesionProfile> per_doc,
                               StdNormalization norm = StdNormalization::sample);
CorpusCohesion corpus_cohesion(std::span<const Document> docs,
                               const ConnectiveLexicon& lexicon,
                               StdNormalization norm = StdNormalization::sample);

/// Pools per-document counts into one profile.
CohesionProfile pool_profiles(std::span<const CohesionProfile> profiles);

double standard_deviation(std::span<const double> values, StdNormalization norm);

/// Pearson correlation. Throws InputError on length mismatch, fewer than two
/// values or a constant vector ("zero variance").
double connective_correlation(std::span<const double> a,
                              std::span<const double> b);

}  // namespace orality
