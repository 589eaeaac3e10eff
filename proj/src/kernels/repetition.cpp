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
#include <array>

#include "orality/kernels.hpp"

namespace orality::kernels {

namespace {

constexpr std::array<std::size_t, 3> kWindows = {2, 5, 10};
constexpr std::size_t kMaxWindow = 10;

bool same_ngram(std::span<const std::uint32_t> ids, std::size_t i,
                std::size_t j, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (ids[i + k] != ids[j + k]) return false;
  }
  return true;
}

// Hits contributed by the n-grams starting at j.
std::uint64_t hits_at(std::span<const std::uint32_t> ids, std::size_t j) {
  std::uint64_t hits = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    if (j + n > ids.size()) break;
    std::size_t lo = j > kMaxWindow ? j - kMaxWindow : 0;
    for (std::size_t i = j; i-- > lo;) {
      if (same_ngram(ids, i, j, n)) {
        const std::size_t gap = j - i;
        hits += static_cast<std::uint64_t>(std::count_if(
            kWindows.begin(), kWindows.end(),
            [gap](std::size_t w) { return gap <= w; }));
        break;  // the nearest earlier start decides every window
      }
    }
  }
  return hits;
}

}  // namespace

std::uint64_t repetition_hits(std::span<const std::uint32_t> ids,
                              Execution exec) {
  const std::int64_t size = static_cast<std::int64_t>(ids.size());
  std::uint64_t total = 0;
  if (exec == Execution::serial) {
    for (std::int64_t j = 1; j < size; ++j) {
      total += hits_at(ids, static_cast<std::size_t>(j));
    }
  } else {
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (std::int64_t j = 1; j < size; ++j) {
      total += hits_at(ids, static_cast<std::size_t>(j));
    }
  }
  return total;
}

}  // namespace orality::kernels
