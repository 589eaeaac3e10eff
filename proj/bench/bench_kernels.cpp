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

// Serial reference vs OpenMP kernels on synthetic Zipf-like text.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "orality/document.hpp"
#include "orality/kernels.hpp"
#include "orality/lexicons.hpp"
#include "orality/report.hpp"

namespace {

using orality::kernels::Execution;

std::vector<std::string> zipf_tokens(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> weights;
  for (int rank = 1; rank <= 2000; ++rank) weights.push_back(1.0 / rank);
  std::discrete_distribution<int> pick(weights.begin(), weights.end());
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("w" + std::to_string(pick(rng)));
  return out;
}

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_TtrCurve(benchmark::State& state) {
  const auto tokens = zipf_tokens(static_cast<std::size_t>(state.range(1)), 7);
  const auto ids = orality::kernels::intern_tokens(tokens);
  orality::kernels::TtrCurveSpec spec;
  spec.seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orality::kernels::mean_ttr_curve(ids, spec, mode(state)));
  }
}

void BM_Repetition(benchmark::State& state) {
  const auto tokens = zipf_tokens(static_cast<std::size_t>(state.range(1)), 11);
  const auto ids = orality::kernels::intern_tokens(tokens);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orality::kernels::repetition_hits(ids, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ids.size()));
}

void BM_AnalyzeCorpus(benchmark::State& state) {
  static const orality::LexiconSet lexicons =
      orality::load_lexicon_set(ORALITY_BENCH_LEXICON_DIR);
  std::vector<orality::Document> docs;
  for (int d = 0; d < state.range(1); ++d) {
    std::string text;
    for (const auto& t : zipf_tokens(2000, 100 + d)) text += t + " ";
    docs.push_back(orality::read_plain(text, "doc" + std::to_string(d)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(orality::analyze_corpus(docs, lexicons, {}, mode(state)));
  }
}

}  // namespace

// Arg 0: 0 = serial reference, 1 = OpenMP. Arg 1: token or document count.
BENCHMARK(BM_TtrCurve)->ArgsProduct({{0, 1}, {500, 50000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Repetition)->ArgsProduct({{0, 1}, {10000, 1000000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnalyzeCorpus)->ArgsProduct({{0, 1}, {8, 32}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
