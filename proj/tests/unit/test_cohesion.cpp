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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "orality/cohesion.hpp"
#include "orality/document.hpp"
#include "test_support.hpp"

using namespace orality;

namespace {

ClassFrequencies freqs(double add, double caus, double temp, double log) {
  ClassFrequencies f;
  f[ConnectiveClass::additive] = add;
  f[ConnectiveClass::causal] = caus;
  f[ConnectiveClass::temporal] = temp;
  f[ConnectiveClass::logical] = log;
  return f;
}

ConnectiveLexicon small_lexicon() {
  ConnectiveLexicon lex;
  std::vector<std::string> add = {"and", "in addition"}, caus = {"because"},
                           temp = {"then"}, logn = {"however"}, addn = {"however"};
  lex.set_entries(ConnectiveClass::additive, Polarity::positive, add);
  lex.set_entries(ConnectiveClass::causal, Polarity::positive, caus);
  lex.set_entries(ConnectiveClass::temporal, Polarity::positive, temp);
  lex.set_entries(ConnectiveClass::logical, Polarity::negative, logn);
  lex.set_entries(ConnectiveClass::additive, Polarity::negative, addn);
  return lex;
}

std::vector<std::vector<std::string>> filler_with(int total, std::vector<std::string> extra) {
  std::vector<std::string> s = extra;
  while (static_cast<int>(s.size()) < total) s.push_back("x");
  return {s};
}

}  // namespace

TEST_CASE("class weights") {
  CHECK(class_weight(ConnectiveClass::causal) == 2.0);
  CHECK(class_weight(ConnectiveClass::logical) == 1.5);
  CHECK(class_weight(ConnectiveClass::additive) == 1.5);
  CHECK(class_weight(ConnectiveClass::temporal) == 1.0);
}

TEST_CASE("weighted sum of printed class frequencies") {
  CHECK(std::fabs(weighted_sum(freqs(2.38, 4.66, 3.50, 1.12)) - 18.10) <= 0.05);
  CHECK(std::fabs(weighted_sum(freqs(5.55, 7.76, 2.69, 2.76)) - 30.67) <= 0.05);
  CHECK(weighted_sum(freqs(0, 0, 0, 0)) == 0.0);
  CHECK_THROWS_AS(weighted_sum(freqs(-1, 0, 0, 0)), InputError);
}

TEST_CASE("weighted sum is linear under scaling") {
  ClassFrequencies f = freqs(2.38, 4.66, 3.50, 1.12);
  for (double k : {0.0, 0.5, 2.0, 3.25, 10.0}) {
    ClassFrequencies g = freqs(k * 2.38, k * 4.66, k * 3.50, k * 1.12);
    CHECK(weighted_sum(g) == doctest::Approx(k * weighted_sum(f)).epsilon(1e-12));
  }
}

TEST_CASE("cohesion value of printed pairs") {
  CHECK(std::fabs(cohesion_value(18.10, 1.08) - 0.026) <= 0.002);
  CHECK(std::fabs(cohesion_value(30.67, 2.07) - 0.212) <= 0.002);
  CHECK(std::fabs(cohesion_value(16.30, 1.02) - 0.007) <= 0.002);
  CHECK(cohesion_value(30.67, 2.07) == doctest::Approx(0.2125).epsilon(1e-3));
}

TEST_CASE("cohesion value guards") {
  CHECK_THROWS_WITH_AS(cohesion_value(1.0, 2.0), doctest::Contains("degenerate base"),
                       PreconditionError);
  CHECK_THROWS_WITH_AS(cohesion_value(10.0, 0.0), doctest::Contains("degenerate spread"),
                       PreconditionError);
  CHECK(cohesion_value(12.0, 1.0) == 0.0);
}

TEST_CASE("cohesion value monotonicity") {
  for (double s : {1.5, 10.0, 30.0}) {
    CHECK(cohesion_value(s, 1.2) < cohesion_value(s, 1.5));
    CHECK(cohesion_value(s, 0.5) < cohesion_value(s, 0.8));
  }
  CHECK(cohesion_value(10.0, 2.0) > cohesion_value(20.0, 2.0));
  CHECK(cohesion_value(10.0, 0.5) < cohesion_value(20.0, 0.5));
}

TEST_CASE("connective frequencies") {
  ConnectiveLexicon lex = small_lexicon();
  auto three = filler_with(1000, {"because", "because", "because"});
  CohesionProfile p = connective_frequencies(three, lex);
  CHECK(p.freq_per_1000[ConnectiveClass::causal] == doctest::Approx(3.0));
  CHECK(p.token_count == 1000);

  auto none = filler_with(10, {});
  CohesionProfile z = connective_frequencies(none, lex);
  for (double v : z.freq_per_1000.per_1000) CHECK(v == 0.0);
  CHECK(z.weighted_sum == 0.0);

  auto mixed = filler_with(500, {"and", "in", "addition", "then"});
  CohesionProfile m = connective_frequencies(mixed, lex);
  CHECK(m.freq_per_1000[ConnectiveClass::additive] == doctest::Approx(4.0));
  CHECK(m.freq_per_1000[ConnectiveClass::temporal] == doctest::Approx(2.0));
  CHECK(m.weighted_sum == doctest::Approx(1.5 * 4.0 + 2.0));
}

TEST_CASE("dual-class connective counts for each class; polarity is tracked") {
  ConnectiveLexicon lex = small_lexicon();
  auto s = filler_with(100, {"however"});
  CohesionProfile p = connective_frequencies(s, lex);
  CHECK(p.class_counts[static_cast<std::size_t>(ConnectiveClass::additive)] == 1);
  CHECK(p.class_counts[static_cast<std::size_t>(ConnectiveClass::logical)] == 1);
  CHECK(p.polarity_counts[static_cast<std::size_t>(ConnectiveClass::logical)]
                         [static_cast<std::size_t>(Polarity::negative)] == 1);
  CHECK(p.weighted_sum == doctest::Approx((1.5 + 1.5) * 10.0));
}

TEST_CASE("matches do not cross sentence boundaries") {
  ConnectiveLexicon lex = small_lexicon();
  std::vector<std::vector<std::string>> split = {{"x", "in"}, {"addition", "x"}};
  CohesionProfile p = connective_frequencies(split, lex);
  CHECK(p.class_counts[static_cast<std::size_t>(ConnectiveClass::additive)] == 0);
}

TEST_CASE("connective frequencies of a document use word tokens") {
  Document d = read_plain("We ran, because the gate fell. Then we hid.");
  CohesionProfile p = connective_frequencies(d, small_lexicon());
  CHECK(p.token_count == 9);
  CHECK(p.class_counts[static_cast<std::size_t>(ConnectiveClass::causal)] == 1);
  CHECK(p.class_counts[static_cast<std::size_t>(ConnectiveClass::temporal)] == 1);
}

TEST_CASE("corpus cohesion: spread of per-document sums") {
  CohesionProfile a, b;
  a.token_count = b.token_count = 1000;
  a.class_counts[static_cast<std::size_t>(ConnectiveClass::temporal)] = 10;
  b.class_counts[static_cast<std::size_t>(ConnectiveClass::temporal)] = 12;
  a.freq_per_1000[ConnectiveClass::temporal] = 10;
  b.freq_per_1000[ConnectiveClass::temporal] = 12;
  a.weighted_sum = 10;
  b.weighted_sum = 12;
  std::vector<CohesionProfile> docs = {a, b};
  CorpusCohesion c = corpus_cohesion(docs);
  CHECK(c.aggregate.weighted_sum == doctest::Approx(11.0));
  CHECK(c.std_dev == doctest::Approx(std::sqrt(2.0)));
  CHECK(c.cohesion_value == doctest::Approx(0.14453241315894394).epsilon(1e-12));
  CHECK(c.per_doc_sums == std::vector<double>{10, 12});

  CorpusCohesion pop = corpus_cohesion(docs, StdNormalization::population);
  CHECK(pop.std_dev == doctest::Approx(1.0));

  std::vector<CohesionProfile> one = {a};
  CHECK_THROWS_AS(corpus_cohesion(one), PreconditionError);
  std::vector<CohesionProfile> same = {a, a};
  CHECK_THROWS_WITH_AS(corpus_cohesion(same), doctest::Contains("degenerate spread"),
                       PreconditionError);
}

TEST_CASE("standard deviation normalizations") {
  std::vector<double> v = {2, 4, 4, 4, 5, 5, 7, 9};
  CHECK(standard_deviation(v, StdNormalization::population) == doctest::Approx(2.0));
  CHECK(standard_deviation(v, StdNormalization::sample) ==
        doctest::Approx(std::sqrt(32.0 / 7)));
}

TEST_CASE("connective correlation") {
  std::vector<double> a = {1, 2, 3, 4}, b = {4, 3, 2, 1};
  CHECK(connective_correlation(a, a) == 1.0);
  CHECK(connective_correlation(a, b) == -1.0);
  std::vector<double> bnc = {2.38, 4.66, 3.50, 1.12}, books = {2.31, 4.78, 5.58, 0.91};
  CHECK(connective_correlation(bnc, books) == doctest::Approx(0.8877187430828398).epsilon(1e-12));
  CHECK(connective_correlation(bnc, bnc) == 1.0);
  std::vector<double> neg = {-2.38, -4.66, -3.50, -1.12};
  CHECK(connective_correlation(bnc, neg) == -1.0);
  std::vector<double> flat = {1, 1, 1, 1};
  CHECK_THROWS_WITH_AS(connective_correlation(a, flat), doctest::Contains("zero variance"),
                       InputError);
  std::vector<double> short_v = {1, 2, 3};
  CHECK_THROWS_AS(connective_correlation(a, short_v), InputError);
}
