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

#include <filesystem>
#include <fstream>

#include "fake_endpoint.hpp"
#include "orality/session.hpp"
#include "test_support.hpp"

using namespace orality;
using orality::testing::four_agent_config;
using orality::testing::ScriptedBackend;

namespace {

std::vector<std::string> speakers(const Transcript& t) {
  std::vector<std::string> out;
  for (const Turn& turn : t.turns) out.push_back(turn.speaker);
  return out;
}

struct MemorySink : TranscriptSink {
  std::vector<Turn> turns;
  void append(const Turn& t) override { turns.push_back(t); }
};

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("orality_session_" + name);
}

}  // namespace

TEST_CASE("assemble_input follows the concatenation rule") {
  SessionConfig cfg = four_agent_config(2);
  const auto& roster = cfg.agents;
  std::vector<CycleEntry> cycle = {{"Master", "You enter."}};
  CHECK(assemble_input(cycle, roster[1], roster).assembled_input == "Master: You enter.");

  cycle = {{"Master", "g"}, {"Grog", "a"}, {"Pike", "b"}};
  TurnContext vax = assemble_input(cycle, roster[3], roster);
  CHECK(vax.recipient == "Vax");
  CHECK(vax.assembled_input == "Master: g\nGrog: a\nPike: b");

  cycle.push_back({"Vax", "c"});
  CHECK(assemble_input(cycle, roster[0], roster).assembled_input ==
        "Master: g\nGrog: a\nPike: b\nVax: c");
}

TEST_CASE("assemble_input errors") {
  SessionConfig cfg = four_agent_config(2);
  std::vector<CycleEntry> cycle = {{"Master", "g"}};
  AgentSpec stranger = orality::testing::agent("Keyleth", Role::player);
  CHECK_THROWS_AS(assemble_input(cycle, stranger, cfg.agents), InputError);
  std::vector<CycleEntry> none;
  CHECK_THROWS_AS(assemble_input(none, cfg.agents[1], cfg.agents), InputError);
  std::vector<CycleEntry> wrong = {{"Grog", "a"}};
  CHECK_THROWS_AS(assemble_input(wrong, cfg.agents[1], cfg.agents), InputError);
}

TEST_CASE("system messages") {
  CHECK(gm_system_message("The keep.").rfind(std::string(kGmSystemPrefix), 0) == 0);
  CHECK(gm_system_message("The keep.").find("The keep.") != std::string::npos);
  CHECK(gm_system_message("abcdefghij", 4).find("efgh") == std::string::npos);
  CHECK(player_system_message("Grog, a goliath.") ==
        std::string(kPlayerSystemPrefix) + "Grog, a goliath.");
}

TEST_CASE("presets mirror the published parameter table") {
  auto a = preset_parameters(Preset::sessions_1_2);
  CHECK(a[0].temperature == 0.3);
  CHECK(a[0].max_tokens == 200);
  CHECK(a[1].temperature == 0.4);
  CHECK(a[3].max_tokens == 50);
  auto b = preset_parameters(Preset::sessions_3_4);
  CHECK(b[0].temperature == 0.5);
  CHECK(b[1].temperature == 0.7);
  CHECK(b[3].temperature == 0.4);
  auto c = preset_parameters(Preset::sessions_5_8);
  CHECK(c[0].temperature == 1.0);
  CHECK(c[2].temperature == 0.5);
  CHECK(c[2].max_tokens == 100);
  CHECK(parse_preset("sessions-3-4") == Preset::sessions_3_4);
  CHECK_FALSE(parse_preset("sessions-9").has_value());
}

TEST_CASE("cap 2: turn order and counts") {
  ScriptedBackend backend;
  SessionResult r = run_session(four_agent_config(2), backend);
  CHECK(r.stop == StopReason::interaction_cap);
  CHECK(speakers(r.transcript) ==
        std::vector<std::string>{"Master", "Grog", "Pike", "Vax", "Master", "Grog", "Pike",
                                 "Vax", "Master"});
  CHECK(backend.requests.front().messages.back().content == "Please start the adventure!");
}

TEST_CASE("cap 1: one turn per player and two GM turns") {
  ScriptedBackend backend;
  SessionResult r = run_session(four_agent_config(1), backend);
  CHECK(speakers(r.transcript) ==
        std::vector<std::string>{"Master", "Grog", "Pike", "Vax", "Master"});
}

TEST_CASE("interaction cap bounds every player") {
  for (int cap : {1, 3, 5}) {
    ScriptedBackend backend;
    SessionResult r = run_session(four_agent_config(cap), backend);
    for (const char* name : {"Grog", "Pike", "Vax"}) {
      auto s = speakers(r.transcript);
      CHECK(std::count(s.begin(), s.end(), name) == cap);
    }
  }
}

TEST_CASE("players see a growing prefix within a cycle") {
  ScriptedBackend backend;
  run_session(four_agent_config(3), backend);
  for (std::size_t cycle_start = 1; cycle_start + 2 < backend.requests.size();
       cycle_start += 4) {
    std::string prev;
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string& input = backend.requests[cycle_start + k].messages.back().content;
      if (k > 0) {
        CHECK(input.size() > prev.size());
        CHECK(input.rfind(prev, 0) == 0);
      }
      prev = input;
    }
  }
}

TEST_CASE("full history versus stateless memory") {
  SessionConfig cfg = four_agent_config(2);
  ScriptedBackend full;
  run_session(cfg, full);
  // Grog's second request: system, (user, assistant) from turn one, then user.
  CHECK(full.requests[5].messages.size() == 4);
  CHECK(full.requests[5].messages[0].role == "system");
  CHECK(full.requests[5].messages[2].role == "assistant");

  cfg.stateless = true;
  ScriptedBackend bare;
  run_session(cfg, bare);
  for (const ChatRequest& req : bare.requests) CHECK(req.messages.size() == 2);
}

TEST_CASE("requests carry agent parameters") {
  SessionConfig cfg = four_agent_config(1);
  cfg.agents[3].temperature = 0.4;
  cfg.agents[3].max_tokens = 50;
  ScriptedBackend backend;
  SessionResult r = run_session(cfg, backend);
  CHECK(backend.requests[3].temperature == 0.4);
  CHECK(backend.requests[3].max_tokens == 50);
  CHECK(r.transcript.turns[3].temperature == 0.4);
  CHECK(r.transcript.turns[3].model == "test-model");
  CHECK(r.transcript.turns[0].role == Role::gm);
  CHECK(r.transcript.turns[1].role == Role::player);
}

TEST_CASE("quota exhaustion at Pike ends the session after GM and Grog") {
  ScriptedBackend backend;
  backend.fail_at = 2;
  backend.failure = [] { throw TokenLimitError("quota"); };
  MemorySink sink;
  SessionResult r = run_session(four_agent_config(2), backend, &sink);
  CHECK(r.stop == StopReason::token_limit);
  CHECK(speakers(r.transcript) == std::vector<std::string>{"Master", "Grog"});
  CHECK(sink.turns.size() == 2);
}

TEST_CASE("other terminal errors propagate after flushing") {
  ScriptedBackend backend;
  backend.fail_at = 2;
  backend.failure = [] { throw EndpointError("max retries exceeded", 0); };
  auto path = temp_path("propagate.jsonl");
  {
    JsonlTranscriptWriter writer(path);
    CHECK_THROWS_AS(run_session(four_agent_config(2), backend, &writer), EndpointError);
  }
  Transcript persisted = read_transcript(text::read_file(path), TranscriptFormat::jsonl);
  CHECK(persisted.turns.size() == 2);
}

TEST_CASE("jsonl writer persists every turn as it happens") {
  auto path = temp_path("flush.jsonl");
  ScriptedBackend backend;
  JsonlTranscriptWriter writer(path);
  struct Probe : TranscriptSink {
    JsonlTranscriptWriter* inner;
    std::filesystem::path path;
    std::size_t checked = 0;
    void append(const Turn& t) override {
      inner->append(t);
      // The file holds exactly the turns appended so far.
      Transcript now = read_transcript(text::read_file(path), TranscriptFormat::jsonl);
      CHECK(now.turns.size() == ++checked);
    }
  } probe;
  probe.inner = &writer;
  probe.path = path;
  run_session(four_agent_config(1), backend, &probe);
  CHECK(probe.checked == 5);
}

TEST_CASE("wall-clock limit stops before the next turn") {
  SessionConfig cfg = four_agent_config(200);
  cfg.wall_clock_limit = std::chrono::milliseconds(3);
  struct Slow : ChatBackend {
    std::string complete(const ChatRequest&) override {
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
      return "slow";
    }
  } slow;
  SessionResult r = run_session(cfg, slow);
  CHECK(r.stop == StopReason::wall_clock);
  CHECK(r.transcript.turns.size() == 1);
}

TEST_CASE("config validation") {
  SessionConfig cfg = four_agent_config(2);
  CHECK_NOTHROW(validate_config(cfg));
  cfg.max_interactions_per_player = 0;
  CHECK_THROWS_AS(validate_config(cfg), InputError);
  cfg = four_agent_config(2);
  cfg.agents[1].role = Role::gm;
  CHECK_THROWS_AS(validate_config(cfg), InputError);
  cfg = four_agent_config(2);
  cfg.agents[2].temperature = 2.5;
  CHECK_THROWS_AS(validate_config(cfg), InputError);
  cfg = four_agent_config(2);
  cfg.agents[2].name = "grog";
  CHECK_THROWS_AS(validate_config(cfg), InputError);
}

TEST_CASE("render_transcript") {
  Transcript t;
  t.turns.push_back({0, "Master", Role::gm, "Hello\nthere", "m", 0.3});
  t.turns.push_back({1, "Grog", Role::player, "Hi", "m", 0.4});
  const std::string jsonl = render_transcript(t, TranscriptFormat::jsonl);
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 2);
  CHECK(render_transcript(t, TranscriptFormat::speaker_lines) ==
        "Master: Hello there\nGrog: Hi\n");
  CHECK_THROWS_AS(render_transcript(Transcript{}, TranscriptFormat::jsonl), InputError);
}

TEST_CASE("session config file: presets, descriptions and unknown keys") {
  SessionConfig cfg = load_session_config(orality::testing::data_dir() / "session" / "config.json");
  REQUIRE(cfg.agents.size() == 4);
  CHECK(cfg.agents[0].name == "Master");
  CHECK(cfg.agents[0].temperature == 1.0);
  CHECK(cfg.agents[0].max_tokens == 200);
  CHECK(cfg.agents[3].max_tokens == 50);
  CHECK(cfg.agents[1].system_message.rfind(std::string(kPlayerSystemPrefix), 0) == 0);
  CHECK(cfg.agents[0].system_message.find("Saltmere") != std::string::npos);

  CHECK_THROWS_AS(parse_session_config(R"({"agents": [], "bogus": 1})", "."), InputError);
  CHECK_THROWS_AS(parse_session_config(R"({"model":"m","agents":[{"name":"A"}]})", "."),
                  InputError);
  SessionConfig inline_cfg = parse_session_config(
      R"({"model":"m","adventure_text":"A cave.","agents":[
           {"name":"GM","temperature":0.2,"max_tokens":10},
           {"name":"P","description":"a bard","temperature":0.2,"max_tokens":10}]})",
      ".");
  CHECK(inline_cfg.agents[1].role == Role::player);
  CHECK(inline_cfg.opening_prompt == "Please start the adventure!");
}

TEST_CASE("end to end against a local chat endpoint") {
  orality::testing::FakeEndpoint server(
      [](int call, const httplib::Request&, httplib::Response& res) {
        res.set_content(orality::testing::completion_body("turn " + std::to_string(call)),
                        "application/json");
      });
  SessionConfig cfg = four_agent_config(1);
  cfg.endpoint = server.url();
  ChatClient client(std::make_shared<HttpChatTransport>(cfg.endpoint, "k"), {}, [](auto) {});
  SessionResult r = run_session(cfg, client);
  REQUIRE(r.transcript.turns.size() == 5);
  CHECK(r.transcript.turns[4].content == "turn 4");
  RoleSplit s = split_roles(r.transcript);
  CHECK(s.gm_turns.size() == 2);
  CHECK(s.pc_turns.size() == 3);
}
