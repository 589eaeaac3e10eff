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

#include <algorithm>
#include <random>
#include <unordered_map>

#include "orality/error.hpp"
#include "orality/kernels.hpp"

namespace orality::kernels {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_spec(std::span<const std::uint32_t> ids, const TtrCurveSpec& spec) {
  if (spec.n_min < 2 || spec.n_min > spec.n_max || spec.trials < 1) {
    throw PreconditionError("invalid TTR curve parameters");
  }
  if (static_cast<std::size_t>(spec.n_max) > ids.size()) {
    throw PreconditionError("too short for voc-D");
  }
}

}  // namespace

std::vector<std::uint32_t> intern_tokens(std::span<const std::string> tokens) {
  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<std::uint32_t> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    auto [it, inserted] =
        ids.try_emplace(t, static_cast<std::uint32_t>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

std::uint32_t sample_type_count(std::span<const std::uint32_t> type_ids, int n,
                                int trial, std::uint64_t seed) {
  std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(n),
                                  static_cast<std::uint64_t>(trial)));
  std::uniform_int_distribution<std::size_t> pick(0, type_ids.size() - 1);

  // n <= 50 in practice, so linear membership checks beat any set.
  std::vector<std::size_t> positions;
  std::vector<std::uint32_t> types;
  positions.reserve(static_cast<std::size_t>(n));
  types.reserve(static_cast<std::size_t>(n));
  while (positions.size() < static_cast<std::size_t>(n)) {
    std::size_t pos = pick(rng);
    if (std::find(positions.begin(), positions.end(), pos) != positions.end()) {
      continue;
    }
    positions.push_back(pos);
    std::uint32_t type = type_ids[pos];
    if (std::find(types.begin(), types.end(), type) == types.end()) {
      types.push_back(type);
    }
  }
  return static_cast<std::uint32_t>(types.size());
}

std::vector<double> mean_ttr_curve(std::span<const std::uint32_t> type_ids,
                                   const TtrCurveSpec& spec, Execution exec) {
  check_spec(type_ids, spec);
  const int sizes = spec.n_max - spec.n_min + 1;
  std::vector<std::uint64_t> totals(static_cast<std::size_t>(sizes), 0);

  if (exec == Execution::serial) {
    for (int k = 0; k < sizes; ++k) {
      for (int trial = 0; trial < spec.trials; ++trial) {
        totals[static_cast<std::size_t>(k)] +=
            sample_type_count(type_ids, spec.n_min + k, trial, spec.seed);
      }
    }
  } else {
    std::uint64_t* acc = totals.data();
    const int trials = spec.trials;
#pragma omp parallel for collapse(2) schedule(static) reduction(+ : acc[:sizes])
    for (int k = 0; k < sizes; ++k) {
      for (int trial = 0; trial < trials; ++trial) {
        acc[k] += sample_type_count(type_ids, spec.n_min + k, trial, spec.seed);
      }
    }
  }

  std::vector<double> curve(static_cast<std::size_t>(sizes));
  for (int k = 0; k < sizes; ++k) {
    const double n = spec.n_min + k;
    curve[static_cast<std::size_t>(k)] =
        static_cast<double>(totals[static_cast<std::size_t>(k)]) /
        (n * spec.trials);
  }
  return curve;
}

}  // namespace orality::kernels
