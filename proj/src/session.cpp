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

#include "orality/session.hpp"

#include <algorithm>
#include <set>

#include "orality/error.hpp"
#include "orality/text.hpp"

namespace orality {

namespace {

std::string render_entry(const CycleEntry& e) { return e.speaker + ": " + e.content; }

std::string join_entries(std::span<const CycleEntry> entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out.push_back('\n');
    out += render_entry(entries[i]);
  }
  return out;
}

}  // namespace

void validate_config(const SessionConfig& config) {
  if (config.agents.size() < 2) {
    throw InputError("session needs a GM and at least one player");
  }
  if (config.agents.front().role != Role::gm) {
    throw InputError("the first agent must be the GM");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < config.agents.size(); ++i) {
    const AgentSpec& a = config.agents[i];
    if (a.name.empty()) throw InputError("agent " + std::to_string(i) + " has no name");
    if (!names.insert(text::to_upper(a.name)).second) {
      throw InputError("duplicate agent name " + a.name);
    }
    if (i > 0 && a.role != Role::player) {
      throw InputError("agent " + a.name + ": only the first agent may be GM");
    }
    if (!(a.temperature >= 0.0 && a.temperature <= 2.0)) {
      throw InputError("agent " + a.name + ": temperature outside [0, 2]");
    }
    if (a.max_tokens <= 0) throw InputError("agent " + a.name + ": max_tokens must be > 0");
    if (text::trim(a.system_message).empty()) {
      throw InputError("agent " + a.name + ": empty system message");
    }
  }
  if (config.max_interactions_per_player < 1) {
    throw InputError("max_interactions_per_player must be >= 1");
  }
  if (text::trim(config.opening_prompt).empty()) {
    throw InputError("empty opening prompt");
  }
}

std::array<AgentParams, 4> preset_parameters(Preset preset) {
  switch (preset) {
    case Preset::sessions_1_2:
      return {{{0.3, 200}, {0.4, 100}, {0.3, 100}, {0.3, 50}}};
    case Preset::sessions_3_4:
      return {{{0.5, 200}, {0.7, 100}, {0.5, 100}, {0.4, 50}}};
    case Preset::sessions_5_8:
      return {{{1.0, 200}, {0.7, 100}, {0.5, 100}, {0.4, 50}}};
  }
  return {};
}

std::optional<Preset> parse_preset(std::string_view name) {
  if (name == "sessions-1-2") return Preset::sessions_1_2;
  if (name == "sessions-3-4") return Preset::sessions_3_4;
  if (name == "sessions-5-8") return Preset::sessions_5_8;
  return std::nullopt;
}

std::string gm_system_message(std::string_view adventure, std::size_t max_chars) {
  std::string_view body = text::trim(adventure);
  if (max_chars > 0 && body.size() > max_chars) body = body.substr(0, max_chars);
  return std::string(kGmSystemPrefix) + std::string(body);
}

std::string player_system_message(std::string_view character) {
  return std::string(kPlayerSystemPrefix) + std::string(text::trim(character));
}

TurnContext assemble_input(std::span<const CycleEntry> cycle,
                           const AgentSpec& recipient,
                           std::span<const AgentSpec> roster) {
  auto it = std::find_if(roster.begin(), roster.end(), [&](const AgentSpec& a) {
    return a.name == recipient.name;
  });
  if (it == roster.end()) throw InputError("unknown recipient " + recipient.name);
  const std::size_t position = static_cast<std::size_t>(it - roster.begin());

  // Player k (roster position k) follows the GM and players 1..k-1; the GM
  // follows a complete cycle.
  const std::size_t expected = position == 0 ? roster.size() : position;
  if (cycle.size() != expected) {
    throw InputError("cycle has " + std::to_string(cycle.size()) +
                     " responses, " + recipient.name + " expects " +
                     std::to_string(expected));
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i].speaker != roster[i].name) {
      throw InputError("cycle out of order at " + cycle[i].speaker);
    }
  }
  TurnContext ctx{recipient.name, join_entries(cycle)};
  if (ctx.assembled_input.empty()) throw InputError("empty assembled input");
  return ctx;
}

std::string chat_complete(const AgentSpec& agent,
                          std::span<const ChatMessage> history,
                          const TurnContext& input, ChatBackend& client) {
  if (input.recipient != agent.name) {
    throw InputError("turn context addressed to " + input.recipient +
                     ", not " + agent.name);
  }
  ChatRequest request;
  request.model = agent.model;
  request.temperature = agent.temperature;
  request.max_tokens = agent.max_tokens;
  request.messages.push_back({"system", agent.system_message});
  request.messages.insert(request.messages.end(), history.begin(), history.end());
  request.messages.push_back({"user", input.assembled_input});
  return client.complete(request);
}

JsonlTranscriptWriter::JsonlTranscriptWriter(const std::filesystem::path& path)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw InputError("cannot write transcript " + path.string());
}

void JsonlTranscriptWriter::append(const Turn& turn) {
  out_ << turn_to_jsonl(turn) << '\n';
  out_.flush();
  if (!out_) throw Error("failed writing transcript " + path_.string());
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::interaction_cap: return "interaction-cap";
    case StopReason::token_limit: return "token-limit";
    case StopReason::wall_clock: return "wall-clock";
  }
  return "?";
}

SessionResult run_session(const SessionConfig& config, ChatBackend& client,
                          TranscriptSink* sink) {
  validate_config(config);
  const std::span<const AgentSpec> roster(config.agents);
  const std::size_t players = roster.size() - 1;
  const auto started = std::chrono::steady_clock::now();

  SessionResult result;
  std::vector<std::vector<ChatMessage>> histories(roster.size());

  auto out_of_time = [&] {
    return config.wall_clock_limit.count() > 0 &&
           std::chrono::steady_clock::now() - started >= config.wall_clock_limit;
  };

  // One agent turn; returns the reply and records it.
  auto take_turn = [&](std::size_t agent, const TurnContext& ctx) {
    const AgentSpec& spec = roster[agent];
    std::span<const ChatMessage> history;
    if (!config.stateless) history = histories[agent];
    std::string reply = chat_complete(spec, history, ctx, client);
    if (!config.stateless) {
      histories[agent].push_back({"user", ctx.assembled_input});
      histories[agent].push_back({"assistant", reply});
    }
    Turn turn;
    turn.turn_index = static_cast<int>(result.transcript.turns.size());
    turn.speaker = spec.name;
    turn.role = spec.role;
    turn.content = reply;
    turn.model = spec.model;
    turn.temperature = spec.temperature;
    if (sink) sink->append(turn);
    result.transcript.turns.push_back(std::move(turn));
    return reply;
  };

  try {
    if (out_of_time()) {
      result.stop = StopReason::wall_clock;
      return result;
    }
    std::vector<CycleEntry> cycle;
    cycle.push_back(
        {roster[0].name, take_turn(0, {roster[0].name, config.opening_prompt})});

    for (int round = 1; round <= config.max_interactions_per_player; ++round) {
      for (std::size_t p = 1; p <= players; ++p) {
        if (out_of_time()) {
          result.stop = StopReason::wall_clock;
          return result;
        }
        TurnContext ctx = assemble_input(cycle, roster[p], roster);
        cycle.push_back({roster[p].name, take_turn(p, ctx)});
      }
      if (out_of_time()) {
        result.stop = StopReason::wall_clock;
        return result;
      }
      TurnContext ctx = assemble_input(cycle, roster[0], roster);
      std::string gm_reply = take_turn(0, ctx);
      cycle.clear();
      cycle.push_back({roster[0].name, std::move(gm_reply)});
    }
    result.stop = StopReason::interaction_cap;
  } catch (const TokenLimitError& e) {
    result.stop = StopReason::token_limit;
    result.detail = e.what();
  }
  return result;
}

std::string render_transcript(const Transcript& transcript,
                              TranscriptFormat format) {
  if (transcript.turns.empty()) throw InputError("empty transcript");
  std::string out;
  for (const Turn& turn : transcript.turns) {
    if (format == TranscriptFormat::jsonl) {
      out += turn_to_jsonl(turn);
    } else {
      std::string content = turn.content;
      std::replace(content.begin(), content.end(), '\n', ' ');
      std::replace(content.begin(), content.end(), '\r', ' ');
      out += turn.speaker + ": " + content;
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace orality
