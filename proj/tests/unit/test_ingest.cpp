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

#include "orality/document.hpp"
#include "orality/transcript.hpp"
#include "test_support.hpp"

using namespace orality;

namespace {

std::string row(int id, const char* form, const char* xpos, int head, const char* rel) {
  return std::to_string(id) + "\t" + form + "\t_\t_\t" + xpos + "\t_\t" +
         std::to_string(head) + "\t" + rel + "\t_\t_\n";
}

std::vector<std::string> surfaces(const Sentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) out.push_back(t.surface);
  return out;
}

std::vector<std::string> sorted_contents(const Transcript& t) {
  std::vector<std::string> out;
  for (const Turn& turn : t.turns) out.push_back(turn.content);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("read_conllu: minimal three-token parse") {
  std::string src = row(1, "dogs", "NNS", 2, "nsubj") + row(2, "bark", "VBP", 0, "root") +
                    row(3, "loudly", "RB", 2, "advmod");
  Document doc = read_conllu(src, "d");
  REQUIRE(doc.sentences.size() == 1);
  CHECK(doc.parse_level == ParseLevel::full_dependency);
  CHECK(doc.sentences[0].root_index == 2);
  CHECK(doc.sentences[0].tokens[0].xpos == "NNS");
  CHECK(doc.sentences[0].tokens[0].lower == "dogs");
  CHECK(doc.token_count() == 3);
}

TEST_CASE("read_conllu: head out of range") {
  std::string src = row(1, "dogs", "NNS", 9, "nsubj") + row(2, "bark", "VBP", 0, "root") +
                    row(3, "loudly", "RB", 2, "advmod");
  CHECK_THROWS_AS(read_conllu(src), InputError);
}

TEST_CASE("read_conllu: blank line separates sentences") {
  std::string src = row(1, "Go", "VB", 0, "root") + "\n" + row(1, "Stop", "VB", 0, "root");
  CHECK(read_conllu(src).sentences.size() == 2);
}

TEST_CASE("read_conllu: malformed column count reports the line") {
  std::string src = "# c\n1\tdogs\t_\tNOUN\n";
  CHECK_THROWS_WITH_AS(read_conllu(src), doctest::Contains("line 2"), InputError);
}

TEST_CASE("read_conllu: cycles, self loops and multiple roots") {
  std::string cycle = row(1, "a", "NN", 2, "dep") + row(2, "b", "NN", 1, "dep") +
                      row(3, "c", "VB", 0, "root");
  CHECK_THROWS_WITH_AS(read_conllu(cycle), doctest::Contains("dependency cycle"),
                       InputError);
  std::string self = row(1, "a", "NN", 1, "dep") + row(2, "b", "VB", 0, "root");
  CHECK_THROWS_AS(read_conllu(self), InputError);
  std::string two_roots = row(1, "a", "VB", 0, "root") + row(2, "b", "VB", 0, "root");
  CHECK_THROWS_AS(read_conllu(two_roots), InputError);
  std::string bad_root = row(1, "a", "VB", 2, "root") + row(2, "b", "VB", 0, "dep");
  CHECK_THROWS_AS(read_conllu(bad_root), InputError);
}

TEST_CASE("read_conllu: multiword ranges and empty nodes are skipped") {
  std::string src = "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n" + row(1, "do", "VBP", 0, "root") +
                    row(2, "n't", "RB", 1, "advmod") + "2.1\tx\t_\t_\t_\t_\t_\t_\t_\t_\n";
  Document doc = read_conllu(src);
  CHECK(doc.token_count() == 2);
}

TEST_CASE("read_conllu: empty input is an error") {
  CHECK_THROWS_AS(read_conllu(""), InputError);
  CHECK_THROWS_AS(read_conllu("# only comments\n"), InputError);
}

TEST_CASE("golden fixture: shape, speakers and writer round-trip") {
  Document doc = read_conllu(orality::testing::read_fixture("golden.conllu"), "golden");
  CHECK(doc.sentences.size() == 5);
  CHECK(doc.token_count() == 38);
  CHECK(doc.sentences[0].speaker == "MATT");
  CHECK(doc.sentences[1].speaker == "LIAM");
  Document again = read_conllu(write_conllu(doc), "golden");
  REQUIRE(again.sentences.size() == doc.sentences.size());
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    CHECK(surfaces(again.sentences[i]) == surfaces(doc.sentences[i]));
    CHECK(again.sentences[i].root_index == doc.sentences[i].root_index);
    CHECK(again.sentences[i].speaker == doc.sentences[i].speaker);
  }
}

TEST_CASE("read_plain: sentences and punctuation") {
  Document doc = read_plain("Hello there. Go!");
  REQUIRE(doc.sentences.size() == 2);
  CHECK(surfaces(doc.sentences[0]) == std::vector<std::string>{"Hello", "there", "."});
  CHECK(surfaces(doc.sentences[1]) == std::vector<std::string>{"Go", "!"});
  CHECK(doc.parse_level == ParseLevel::plain);
  CHECK(doc.sentences[0].tokens[0].lower == "hello");
}

TEST_CASE("read_plain: internal apostrophe preserved") {
  Document doc = read_plain("don't stop");
  CHECK(surfaces(doc.sentences[0]) == std::vector<std::string>{"don't", "stop"});
}

TEST_CASE("read_plain: empty document") {
  CHECK_THROWS_WITH_AS(read_plain(""), doctest::Contains("empty document"), InputError);
  CHECK_THROWS_AS(read_plain("   \n\t"), InputError);
}

TEST_CASE("read_plain: counts invariant under trailing whitespace") {
  const std::string base = "The keep is dark. Vax waits, then moves! Why?";
  Document a = read_plain(base);
  for (const char* tail : {" ", "\n", "\n\n  \t", "\r\n"}) {
    Document b = read_plain(base + tail);
    CHECK(b.sentences.size() == a.sentences.size());
    CHECK(b.token_count() == a.token_count());
  }
}

TEST_CASE("read_transcript: speaker lines with a GM set") {
  SpeakerRoles roles({"MATT"}, {});
  Transcript t = read_transcript(
      "MATT: Well, there are stairs here.\nLIAM: I'm going to look around.\n",
      TranscriptFormat::speaker_lines, roles);
  REQUIRE(t.turns.size() == 2);
  CHECK(t.turns[0].role == Role::gm);
  CHECK(t.turns[1].role == Role::unknown);
  SpeakerRoles both({"MATT"}, {"LIAM"});
  Transcript u = read_transcript("MATT: a\nLIAM: b\n", TranscriptFormat::speaker_lines, both);
  CHECK(u.turns[1].role == Role::player);
}

TEST_CASE("read_transcript: continuation lines join the previous turn") {
  Transcript t = read_transcript("MATT: You see a door.\nIt is locked.\nLIAM: I knock.\n",
                                 TranscriptFormat::speaker_lines);
  REQUIRE(t.turns.size() == 2);
  CHECK(t.turns[0].content == "You see a door.\nIt is locked.");
  CHECK(t.turns[1].turn_index == 1);
}

TEST_CASE("read_transcript: jsonl") {
  const std::string src =
      R"({"turn":0,"speaker":"Master","role":"gm","content":"Welcome."})" "\n"
      R"({"turn":1,"speaker":"Grog","role":"player","content":"I smash.","model":"m","temperature":0.7})" "\n"
      R"({"turn":2,"speaker":"Pike","role":"player","content":"I heal."})" "\n";
  Transcript t = read_transcript(src, TranscriptFormat::jsonl);
  REQUIRE(t.turns.size() == 3);
  CHECK(t.turns[0].role == Role::gm);
  CHECK(t.turns[1].model == "m");
  CHECK(t.turns[1].temperature == doctest::Approx(0.7));
  CHECK_FALSE(t.turns[2].model.has_value());
}

TEST_CASE("read_transcript: jsonl missing fields report the line") {
  const std::string src = R"({"turn":0,"speaker":"Master","content":"a"})" "\n"
                          R"({"turn":1,"content":"b"})" "\n";
  CHECK_THROWS_WITH_AS(read_transcript(src, TranscriptFormat::jsonl),
                       doctest::Contains("line 2"), InputError);
}

TEST_CASE("split_roles: partition by role") {
  Transcript t;
  const Role roles[] = {Role::gm, Role::player, Role::player, Role::gm};
  for (int i = 0; i < 4; ++i) {
    t.turns.push_back({i, i % 3 == 0 ? "MATT" : "LIAM", roles[i],
                       "Turn number " + std::to_string(i) + ".", {}, {}});
  }
  RoleSplit s = split_roles(t);
  CHECK(s.gm_turns == std::vector<int>{0, 3});
  CHECK(s.pc_turns == std::vector<int>{1, 2});
  CHECK(s.gm.sentences.size() == 2);
  CHECK(s.pc.sentences.size() == 2);
}

TEST_CASE("split_roles: degenerate and unknown") {
  Transcript t;
  t.turns.push_back({0, "MATT", Role::gm, "Hello.", {}, {}});
  t.turns.push_back({1, "MATT", Role::gm, "Again.", {}, {}});
  CHECK_THROWS_WITH_AS(split_roles(t), doctest::Contains("degenerate split"), InputError);
  t.turns.push_back({2, "SAM", Role::unknown, "Hi.", {}, {}});
  CHECK_THROWS_AS(split_roles(t), InputError);
  t.turns.push_back({3, "LIAM", Role::player, "Yes.", {}, {}});
  CHECK_THROWS_AS(split_roles(t), InputError);
  RoleSplit s = split_roles(t, {.ignore_unknown = true});
  CHECK(s.gm_turns.size() == 2);
  CHECK(s.pc_turns == std::vector<int>{3});
}

TEST_CASE("render to jsonl, read back, split: contents are preserved") {
  Transcript t;
  const char* speakers[] = {"Master", "Grog", "Pike", "Vax", "Master"};
  for (int i = 0; i < 5; ++i) {
    Role r = i % 4 == 0 ? Role::gm : Role::player;
    t.turns.push_back({i, speakers[i], r, "Line \"" + std::to_string(i) + "\"\nsecond line.",
                       "m", 0.5});
  }
  std::string rendered = render_transcript(t, TranscriptFormat::jsonl);
  Transcript back = read_transcript(rendered, TranscriptFormat::jsonl);
  CHECK(sorted_contents(back) == sorted_contents(t));
  RoleSplit s = split_roles(back);
  CHECK(s.gm_turns.size() + s.pc_turns.size() == t.turns.size());
}

TEST_CASE("speaker-lines rendering round-trips with a GM set") {
  Transcript t;
  t.turns.push_back({0, "Master", Role::gm, "You wake up.", {}, {}});
  t.turns.push_back({1, "Grog", Role::player, "I stand.", {}, {}});
  std::string rendered = render_transcript(t, TranscriptFormat::speaker_lines);
  SpeakerRoles roles({"Master"}, {"Grog"});
  Transcript back = read_transcript(rendered, TranscriptFormat::speaker_lines, roles);
  REQUIRE(back.turns.size() == 2);
  CHECK(back.turns[0].role == Role::gm);
  CHECK(back.turns[1].content == "I stand.");
}

TEST_CASE("split_document_by_speaker keeps the dependency parse") {
  Document doc = read_conllu(orality::testing::read_fixture("golden.conllu"), "golden");
  RoleSplit s = split_document_by_speaker(doc, SpeakerRoles({"MATT"}, {"LIAM"}));
  CHECK(s.gm.parse_level == ParseLevel::full_dependency);
  CHECK(s.gm.sentences.size() == 3);
  CHECK(s.pc.sentences.size() == 2);
  CHECK(s.gm.id == "golden-DM");
  CHECK(s.pc.id == "golden-PC");
}
