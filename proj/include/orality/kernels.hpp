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

// Data-parallel inner loops. Each kernel has a serial reference path and an
// OpenMP path that produce bit-identical results: randomness is drawn from
// per-trial streams and all reductions are over integers.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace orality::kernels {

enum class Execution { serial, parallel };

/// Maps each token to a dense type id (first occurrence order).
std::vector<std::uint32_t> intern_tokens(std::span<const std::string> tokens);

struct TtrCurveSpec {
  int n_min = 35;
  int n_max = 50;
  int trials = 100;
  std::uint64_t seed = 0;
};

/// Mean type-token ratio of `trials` random samples (without replacement)
/// for every sample size N in [n_min, n_max]. Element k is for N = n_min + k.
/// Requires n_max <= type_ids.size().
std::vector<double> mean_ttr_curve(std::span<const std::uint32_t> type_ids,
                                   const TtrCurveSpec& spec,
                                   Execution exec = Execution::parallel);

/// Number of distinct types in one sample; the stream is fixed by
/// (seed, n, trial).
std::uint32_t sample_type_count(std::span<const std::uint32_t> type_ids, int n,
                                int trial, std::uint64_t seed);

/// Deterministic 64-bit mixing of a seed with stream coordinates.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

/// Repetition hits for n-grams n in {1,2,3} and windows w in {2,5,10}: an
/// n-gram starting at j scores once per window w containing an earlier
/// start i of the same n-gram (j - i <= w).
std::uint64_t repetition_hits(std::span<const std::uint32_t> ids,
                              Execution exec = Execution::parallel);

}  // namespace orality::kernels
