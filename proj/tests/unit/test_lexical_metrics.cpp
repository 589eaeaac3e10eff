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

#include <algorithm>
#include <cmath>
#include <random>

#include "orality/document.hpp"
#include "orality/lexical_metrics.hpp"
#include "test_support.hpp"

using namespace orality;
using orality::testing::words;

namespace {

Lexicon lex(const char* entries, LexiconCategory cat = LexiconCategory::academic) {
  return parse_lexicon(entries, "t", cat);
}

std::vector<std::string> repeat(const std::string& w, int n) {
  return std::vector<std::string>(static_cast<std::size_t>(n), w);
}

std::vector<std::string> distinct(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("w" + std::to_string(i));
  return out;
}

std::vector<std::string> fixture_500() {
  return word_tokens(read_plain(orality::testing::read_fixture("vocd_500.txt")));
}

}  // namespace

TEST_CASE("word tokens exclude punctuation and numerals") {
  CHECK(is_word_token("don't"));
  CHECK(is_word_token("half-elf"));
  CHECK(is_word_token("caf\xC3\xA9"));
  CHECK_FALSE(is_word_token("."));
  CHECK_FALSE(is_word_token("42"));
  CHECK_FALSE(is_word_token("--"));
  Document doc = read_plain("The Dragon, 3 times!");
  CHECK(word_tokens(doc) == std::vector<std::string>{"the", "dragon", "times"});
}

TEST_CASE("voc-D model curve") {
  CHECK(vocd_model_ttr(40, 1e9) == doctest::Approx(1.0).epsilon(1e-6));
  const double d = 50, n = 40;
  CHECK(vocd_model_ttr(n, d) == doctest::Approx((d / n) * (std::sqrt(1 + 2 * n / d) - 1)));
}

TEST_CASE("voc-D fit recovers the generating D") {
  std::vector<double> ns, ttr;
  for (int n = 35; n <= 50; ++n) {
    ns.push_back(n);
    ttr.push_back(vocd_model_ttr(n, 73.5));
  }
  CHECK(fit_vocd_d(ns, ttr, 1000) == doctest::Approx(73.5).epsilon(1e-4));
}

TEST_CASE("voc-D degenerate repetition gives D below 1") {
  CHECK(d_value(repeat("a", 200), VocdParams{}) < 1.0);
}

TEST_CASE("voc-D all distinct saturates at the cap") {
  CHECK(d_value(distinct(200), VocdParams{}) == 1000.0);
  VocdParams p;
  p.d_cap = 250;
  CHECK(d_value(distinct(200), p) == 250.0);
}

TEST_CASE("voc-D too short") {
  CHECK_THROWS_WITH_AS(d_value(distinct(49), VocdParams{}), doctest::Contains("too short"),
                       PreconditionError);
  CHECK_NOTHROW(d_value(distinct(50), VocdParams{}));
}

TEST_CASE("voc-D is deterministic and execution independent") {
  auto toks = fixture_500();
  REQUIRE(toks.size() == 500);
  VocdParams p;
  const double a = d_value(toks, p, Execution::parallel);
  const double b = d_value(toks, p, Execution::parallel);
  const double c = d_value(toks, p, Execution::serial);
  CHECK(a == b);
  CHECK(a == c);
  p.rng_seed = 7;
  CHECK(d_value(toks, p) != a);
}

TEST_CASE("voc-D is robust to token order") {
  auto toks = fixture_500();
  const double base = d_value(toks, VocdParams{});
  std::mt19937_64 rng(99);
  for (int i = 0; i < 3; ++i) {
    std::shuffle(toks.begin(), toks.end(), rng);
    CHECK(std::fabs(d_value(toks, VocdParams{}) - base) / base < 0.10);
  }
}

TEST_CASE("voc-D parameter validation") {
  VocdParams p;
  p.n_min = 51;
  CHECK_THROWS_AS(p.validate(500), PreconditionError);
  p = VocdParams{};
  p.trials_per_n = 0;
  CHECK_THROWS_AS(p.validate(500), PreconditionError);
}

TEST_CASE("lexical range") {
  auto r = lexical_range(words("the dragon attacks the keep"), lex("the\nattacks\nkeep"),
                         lex("dragon"), lex("zzz"));
  CHECK(r.lr1 == doctest::Approx(0.8));
  CHECK(r.lr2 == doctest::Approx(0.2));
  CHECK(r.lr3 == 0.0);

  auto none = lexical_range(words("x y z"), lex("a"), lex("b"), lex("c"));
  CHECK(none.lr1 == 0.0);
  CHECK(none.lr2 == 0.0);
  CHECK(none.lr3 == 0.0);

  auto overlap = lexical_range(words("data the"), lex("data\nthe"), lex("dragon"), lex("data"));
  CHECK(overlap.lr1 == doctest::Approx(1.0));
  CHECK(overlap.lr3 == doctest::Approx(0.5));

  auto nested = lexical_range(words("a b"), lex("a"), lex("a\nb"), lex("c"));
  CHECK(nested.lr2 == doctest::Approx(0.5));

  CHECK_THROWS_AS(lexical_range({}, lex("a"), lex("b"), lex("c")), PreconditionError);
}

TEST_CASE("lexical range components lie in [0,1] and ignore order") {
  auto toks = words("the dragon attacks the keep and the keep falls");
  auto b1 = lex("the\nand"), b2 = lex("keep"), ac = lex("attacks\nthe");
  auto r = lexical_range(toks, b1, b2, ac);
  std::reverse(toks.begin(), toks.end());
  auto s = lexical_range(toks, b1, b2, ac);
  CHECK(r.lr1 == s.lr1);
  CHECK(r.lr2 == s.lr2);
  CHECK(r.lr3 == s.lr3);
  for (double v : {r.lr1, r.lr2, r.lr3}) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("concreteness index") {
  ConcretenessTable t;
  t.add("rock", 400);
  t.add("tree", 600);
  t.add("house", 500);
  CHECK(concreteness_index(words("rock tree a b c d e f g h"), t) == doctest::Approx(1.0));
  CHECK(concreteness_index(words("a b c"), t) == 0.0);
  CHECK(concreteness_index(words("house house a b c"), t) == doctest::Approx(2.0));

  ConcretenessTable doubled;
  doubled.add("rock", 200);
  doubled.add("tree", 300);
  ConcretenessTable base;
  base.add("rock", 100);
  base.add("tree", 150);
  auto toks = words("rock tree tree x");
  CHECK(concreteness_index(toks, doubled) ==
        doctest::Approx(2 * concreteness_index(toks, base)));
}

TEST_CASE("deictic/article ratio") {
  Lexicon deictics = lex("this\nhere", LexiconCategory::deictic);
  Lexicon articles = article_lexicon();
  CHECK(deictic_article_ratio(words("this is the house here a"), deictics, articles) ==
        doctest::Approx(1.0));
  CHECK(deictic_article_ratio(words("the cat"), deictics, articles) == 0.0);
  CHECK_THROWS_WITH_AS(deictic_article_ratio(words("this here"), deictics, articles),
                       doctest::Contains("no articles"), PreconditionError);
}

TEST_CASE("repetition per 1000") {
  CHECK(repetition_per_1000(words("a b a")) == doctest::Approx(1000.0));
  CHECK(repetition_per_1000(words("a b c d e f")) == 0.0);
  CHECK(repetition_per_1000(words("x x")) == doctest::Approx(1500.0));
  CHECK_THROWS_AS(repetition_per_1000({}), PreconditionError);
}

TEST_CASE("repetition is zero iff nothing recurs within ten tokens") {
  auto spaced = words("a b c d e f g h i j k a");
  CHECK(repetition_per_1000(spaced) == 0.0);
  auto near = words("a b c d e f g h i j a");
  CHECK(repetition_per_1000(near) > 0.0);
}

TEST_CASE("marker rates") {
  std::vector<std::string> toks = distinct(495);
  for (int i = 0; i < 5; ++i) toks.push_back("really");
  Lexicon emph = lex("really\nof course", LexiconCategory::emphatic_particle);
  CHECK(marker_per_1000(toks, emph) == doctest::Approx(10.0));
  CHECK(marker_per_1000(words("a b c"), emph) == 0.0);

  Lexicon both = lex("of\nof course", LexiconCategory::emphatic_particle);
  CHECK(count_lexicon_matches(words("well of course not"), both) == 1);
  CHECK(count_lexicon_matches(words("of of course"), both) == 2);
}

TEST_CASE("lexical profile on the golden fixture") {
  Document doc = read_conllu(orality::testing::read_fixture("golden.conllu"), "golden");
  LexiconSet lexicons = orality::testing::fixture_lexicons();
  auto toks = word_tokens(doc);
  REQUIRE(toks.size() == 33);
  auto r = lexical_range(toks, lexicons.band1, lexicons.band2, lexicons.academic);
  CHECK(r.lr1 == doctest::Approx(19.0 / 33).epsilon(1e-12));
  CHECK(r.lr2 == doctest::Approx(4.0 / 33).epsilon(1e-12));
  CHECK(r.lr3 == doctest::Approx(1.0 / 33).epsilon(1e-12));
  CHECK(concreteness_index(toks, lexicons.concreteness) ==
        doctest::Approx(2330.0 / 3300).epsilon(1e-12));
  CHECK(deictic_article_ratio(toks, lexicons.deictics, lexicons.articles) ==
        doctest::Approx(0.4));
  CHECK(repetition_per_1000(toks) == doctest::Approx(6000.0 / 33));
  CHECK(marker_per_1000(toks, lexicons.attributive_adjectives) ==
        doctest::Approx(1000.0 / 33));
  CHECK(marker_per_1000(toks, lexicons.emphatic_particles) == doctest::Approx(1000.0 / 33));
  CHECK_THROWS_AS(lexical_profile(toks, lexicons, VocdParams{}), PreconditionError);
}
