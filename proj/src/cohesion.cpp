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

#include "orality/cohesion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orality/error.hpp"
#include "orality/lexical_metrics.hpp"

namespace orality {

namespace {

void finish_profile(CohesionProfile& p) {
  if (p.token_count == 0) {
    throw PreconditionError("connective frequencies: no word tokens");
  }
  for (ConnectiveClass cls : kConnectiveClasses) {
    p.freq_per_1000[cls] =
        static_cast<double>(p.class_counts[static_cast<std::size_t>(cls)]) *
        1000.0 / static_cast<double>(p.token_count);
  }
  p.weighted_sum = weighted_sum(p.freq_per_1000);
}

}  // namespace

double class_weight(ConnectiveClass cls) {
  switch (cls) {
    case ConnectiveClass::causal: return 2.0;
    case ConnectiveClass::logical: return 1.5;
    case ConnectiveClass::additive: return 1.5;
    case ConnectiveClass::temporal: return 1.0;
  }
  return 0.0;
}

double weighted_sum(const ClassFrequencies& freqs) {
  double sum = 0.0;
  for (ConnectiveClass cls : kConnectiveClasses) {
    if (freqs[cls] < 0.0 || !std::isfinite(freqs[cls])) {
      throw InputError("negative frequency for " + std::string(to_string(cls)));
    }
    sum += class_weight(cls) * freqs[cls];
  }
  return sum;
}

CohesionProfile connective_frequencies(
    std::span<const std::vector<std::string>> sentences,
    const ConnectiveLexicon& lexicon) {
  CohesionProfile p;
  for (const std::vector<std::string>& words : sentences) {
    p.token_count += words.size();
    std::span<const std::string> all(words);
    std::size_t i = 0;
    while (i < words.size()) {
      std::span<const std::string> window = all.subspan(i);
      std::size_t len = connective_match_length(window, lexicon);
      if (len == 0) {
        ++i;
        continue;
      }
      const std::set<ConnectiveTag>& tags = *lexicon.tags_for(window.first(len));
      std::array<bool, 4> seen{};
      for (const ConnectiveTag& tag : tags) {
        auto c = static_cast<std::size_t>(tag.cls);
        ++p.polarity_counts[c][static_cast<std::size_t>(tag.polarity)];
        if (!seen[c]) {
          seen[c] = true;
          ++p.class_counts[c];
        }
      }
      i += len;
    }
  }
  finish_profile(p);
  return p;
}

CohesionProfile connective_frequencies(const Document& doc,
                                       const ConnectiveLexicon& lexicon) {
  std::vector<std::vector<std::string>> sentences;
  sentences.reserve(doc.sentences.size());
  for (const Sentence& s : doc.sentences) {
    std::vector<std::string> words;
    for (const AnnotatedToken& t : s.tokens) {
      if (is_word_token(t.lower)) words.push_back(t.lower);
    }
    sentences.push_back(std::move(words));
  }
  return connective_frequencies(sentences, lexicon);
}

double cohesion_value(double weighted_sum, double std_dev) {
  if (!(weighted_sum > 1.0)) throw PreconditionError("degenerate base");
  if (!(std_dev > 0.0)) throw PreconditionError("degenerate spread");
  return std::log(std_dev) / std::log(weighted_sum);
}

CohesionProfile pool_profiles(std::span<const CohesionProfile> profiles) {
  CohesionProfile pooled;
  for (const CohesionProfile& p : profiles) {
    pooled.token_count += p.token_count;
    for (std::size_t c = 0; c < 4; ++c) {
      pooled.class_counts[c] += p.class_counts[c];
      for (std::size_t k = 0; k < 2; ++k) {
        pooled.polarity_counts[c][k] += p.polarity_counts[c][k];
      }
    }
  }
  finish_profile(pooled);
  return pooled;
}

double standard_deviation(std::span<const double> values, StdNormalization norm) {
  const std::size_t n = values.size();
  const std::size_t dof = norm == StdNormalization::sample ? n - 1 : n;
  if (n == 0 || dof == 0) {
    throw PreconditionError("standard deviation needs more values");
  }
  double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(dof));
}

CorpusCohesion corpus_cohesion(std::span<const CohesionProfile> per_doc,
                               StdNormalization norm) {
  if (per_doc.size() < 2) {
    throw PreconditionError("corpus cohesion needs at least 2 documents");
  }
  CorpusCohesion out;
  out.aggregate = pool_profiles(per_doc);
  for (const CohesionProfile& p : per_doc) out.per_doc_sums.push_back(p.weighted_sum);
  out.std_dev = standard_deviation(out.per_doc_sums, norm);
  out.cohesion_value = cohesion_value(out.aggregate.weighted_sum, out.std_dev);
  return out;
}

CorpusCohesion corpus_cohesion(std::span<const Document> docs,
                               const ConnectiveLexicon& lexicon,
                               StdNormalization norm) {
  std::vector<CohesionProfile> profiles;
  profiles.reserve(docs.size());
  for (const Document& d : docs) profiles.push_back(connective_frequencies(d, lexicon));
  return corpus_cohesion(profiles, norm);
}

double connective_correlation(std::span<const double> a,
                              std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("correlation: length mismatch");
  if (a.size() < 2) throw InputError("correlation: need at least 2 values");
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) throw InputError("zero variance");
  // Exact linear dependence gives exactly +-1 despite the rounded sqrt.
  if (saa == sbb && std::abs(sab) == saa) return sab > 0 ? 1.0 : -1.0;
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

}  // namespace orality
