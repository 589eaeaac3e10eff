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

#include "orality/lexical_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orality/error.hpp"

namespace orality {

namespace {

void require_tokens(std::span<const std::string> tokens, const char* what) {
  if (tokens.empty()) {
    throw PreconditionError(std::string(what) + ": no word tokens");
  }
}

double sum_squared_error(std::span<const double> sizes,
                         std::span<const double> ttr, double d) {
  double sse = 0.0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    double r = ttr[i] - vocd_model_ttr(sizes[i], d);
    sse += r * r;
  }
  return sse;
}

}  // namespace

void VocdParams::validate(std::size_t token_count) const {
  if (n_min <= 1 || n_min > n_max || trials_per_n < 1 || fit_runs < 1 ||
      !(d_cap > 0.0)) {
    throw PreconditionError("invalid voc-D parameters");
  }
  if (token_count < static_cast<std::size_t>(n_max)) {
    throw PreconditionError("too short for voc-D");
  }
}

bool is_word_token(std::string_view token) {
  bool has_letter = false;
  for (char c : token) {
    auto u = static_cast<unsigned char>(c);
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || u >= 0x80) {
      has_letter = true;
    } else if (c != '\'' && c != '-') {
      return false;
    }
  }
  return has_letter;
}

std::vector<std::string> word_tokens(const Document& doc) {
  std::vector<std::string> out;
  for (const Sentence& s : doc.sentences) {
    for (const AnnotatedToken& t : s.tokens) {
      if (is_word_token(t.lower)) out.push_back(t.lower);
    }
  }
  return out;
}

double vocd_model_ttr(double n, double d) {
  // (D/N)(sqrt(1+x) - 1) with x = 2N/D equals 2 / (sqrt(1+x) + 1).
  return 2.0 / (std::sqrt(1.0 + 2.0 * n / d) + 1.0);
}

double fit_vocd_d(std::span<const double> sample_sizes,
                  std::span<const double> mean_ttr, double d_cap) {
  constexpr double kLowD = 1e-6;
  constexpr int kGridPoints = 400;
  const double lo = std::log(kLowD);
  const double hi = std::log(d_cap);
  auto sse_at = [&](double log_d) {
    return sum_squared_error(sample_sizes, mean_ttr, std::exp(log_d));
  };

  // Coarse scan in log D, then golden-section search around the best point.
  int best = 0;
  double best_sse = sse_at(lo);
  for (int i = 1; i <= kGridPoints; ++i) {
    double x = lo + (hi - lo) * i / kGridPoints;
    double v = sse_at(x);
    if (v < best_sse) {
      best_sse = v;
      best = i;
    }
  }
  if (best == kGridPoints) return d_cap;

  double a = lo + (hi - lo) * std::max(best - 1, 0) / kGridPoints;
  double b = lo + (hi - lo) * std::min(best + 1, kGridPoints) / kGridPoints;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = sse_at(c);
  double fd = sse_at(d);
  for (int iter = 0; iter < 200 && (b - a) > 1e-12; ++iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = sse_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = sse_at(d);
    }
  }
  double fitted = std::exp((a + b) / 2.0);
  if (sse_at(hi) <= sse_at(std::log(fitted))) return d_cap;
  return std::clamp(fitted, 0.0, d_cap);
}

double d_value(std::span<const std::string> tokens, const VocdParams& params,
               Execution exec) {
  params.validate(tokens.size());
  const std::vector<std::uint32_t> ids = kernels::intern_tokens(tokens);

  std::vector<double> sizes;
  for (int n = params.n_min; n <= params.n_max; ++n) sizes.push_back(n);

  double total = 0.0;
  for (int run = 0; run < params.fit_runs; ++run) {
    kernels::TtrCurveSpec spec{
        .n_min = params.n_min,
        .n_max = params.n_max,
        .trials = params.trials_per_n,
        .seed = kernels::stream_seed(params.rng_seed, 0x766f6364ULL,
                                     static_cast<std::uint64_t>(run)),
    };
    std::vector<double> curve = kernels::mean_ttr_curve(ids, spec, exec);
    total += fit_vocd_d(sizes, curve, params.d_cap);
  }
  return std::clamp(total / params.fit_runs, 0.0, params.d_cap);
}

LexicalRange lexical_range(std::span<const std::string> tokens,
                           const Lexicon& band1, const Lexicon& band2,
                           const Lexicon& academic) {
  require_tokens(tokens, "lexical range");
  std::size_t in1 = 0, in2 = 0, in3 = 0;
  for (const std::string& t : tokens) {
    if (band1.contains(t)) {
      ++in1;
    } else if (band2.contains(t)) {
      ++in2;
    }
    if (academic.contains(t)) ++in3;
  }
  const double n = static_cast<double>(tokens.size());
  return {in1 / n, in2 / n, in3 / n};
}

double concreteness_index(std::span<const std::string> tokens,
                          const ConcretenessTable& table) {
  require_tokens(tokens, "concreteness");
  double sum = 0.0;
  for (const std::string& t : tokens) {
    if (auto v = table.lookup(t)) sum += *v;
  }
  return sum / (static_cast<double>(tokens.size()) * 100.0);
}

std::size_t count_lexicon_matches(std::span<const std::string> tokens,
                                  const Lexicon& lexicon) {
  std::size_t matches = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t len = lexicon.match_at(tokens, i);
    if (len > 0) {
      ++matches;
      i += len;
    } else {
      ++i;
    }
  }
  return matches;
}

double deictic_article_ratio(std::span<const std::string> tokens,
                             const Lexicon& deictics, const Lexicon& articles) {
  std::size_t n_articles = count_lexicon_matches(tokens, articles);
  if (n_articles == 0) throw PreconditionError("no articles");
  return static_cast<double>(count_lexicon_matches(tokens, deictics)) /
         static_cast<double>(n_articles);
}

double repetition_per_1000(std::span<const std::string> tokens,
                           Execution exec) {
  require_tokens(tokens, "repetitions");
  const std::vector<std::uint32_t> ids = kernels::intern_tokens(tokens);
  return static_cast<double>(kernels::repetition_hits(ids, exec)) * 1000.0 /
         static_cast<double>(tokens.size());
}

double marker_per_1000(std::span<const std::string> tokens,
                       const Lexicon& lexicon) {
  require_tokens(tokens, "marker rate");
  return static_cast<double>(count_lexicon_matches(tokens, lexicon)) * 1000.0 /
         static_cast<double>(tokens.size());
}

LexicalProfile lexical_profile(std::span<const std::string> tokens,
                               const LexiconSet& lexicons,
                               const VocdParams& params) {
  LexicalRange range =
      lexical_range(tokens, lexicons.band1, lexicons.band2, lexicons.academic);
  return LexicalProfile{
      .d_value = d_value(tokens, params),
      .lr1 = range.lr1,
      .lr2 = range.lr2,
      .lr3 = range.lr3,
      .concreteness = concreteness_index(tokens, lexicons.concreteness),
      .deictic_article_ratio =
          deictic_article_ratio(tokens, lexicons.deictics, lexicons.articles),
      .repetition_per_1000 = repetition_per_1000(tokens),
      .attributive_adj_per_1000 =
          marker_per_1000(tokens, lexicons.attributive_adjectives),
      .emphatic_per_1000 = marker_per_1000(tokens, lexicons.emphatic_particles),
  };
}

}  // namespace orality
