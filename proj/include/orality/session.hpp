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

#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orality/chat_client.hpp"
#include "orality/transcript.hpp"

namespace orality {

inline constexpr std::string_view kGmSystemPrefix =
    "You are the Dungeon Master of a fantasy role-playing game. Your task is "
    "to guide a group of adventurers through a dungeon filled with monsters, "
    "traps, and treasure. The Adventure is ";
inline constexpr std::string_view kPlayerSystemPrefix =
    "You are a Dungeons and Dragons player and take the role of ";
inline constexpr std::string_view kDefaultOpeningPrompt =
    "Please start the adventure!";

struct AgentSpec {
  std::string name;
  Role role = Role::player;
  std::string system_message;
  double temperature = 0.7;
  int max_tokens = 100;
  std::string model;
};

struct SessionConfig {
  std::vector<AgentSpec> agents;  // GM first, then players in speaking order
  std::string adventure_text;
  std::string opening_prompt = std::string(kDefaultOpeningPrompt);
  int max_interactions_per_player = 200;
  std::string endpoint;
  std::string api_key_env = "OPENAI_API_KEY";
  RetryPolicy retry;
  // Agents see only their system message and the latest assembled input.
  bool stateless = false;
  // Zero or negative disables the limit.
  std::chrono::milliseconds wall_clock_limit = std::chrono::minutes(30);
};

/// Exactly one GM, listed first; at least one player; unique names;
/// temperature in [0, 2]; max_tokens > 0; cap >= 1. Throws InputError.
void validate_config(const SessionConfig& config);

/// Temperature/max-token presets for GM and three players, matching the
/// published session groups 1-2, 3-4 and 5-8.
enum class Preset { sessions_1_2, sessions_3_4, sessions_5_8 };

struct AgentParams {
  double temperature;
  int max_tokens;
};

std::array<AgentParams, 4> preset_parameters(Preset preset);
std::optional<Preset> parse_preset(std::string_view name);

/// Adventure text is embedded verbatim unless max_chars > 0.
std::string gm_system_message(std::string_view adventure,
                              std::size_t max_chars = 0);
std::string player_system_message(std::string_view character);

struct CycleEntry {
  std::string speaker;
  std::string content;
};

struct TurnContext {
  std::string recipient;
  std::string assembled_input;
};

/// Input for the next speaker. Player k gets the GM's response and those of
/// players 1..k-1 from the current cycle; the GM gets the whole previous
/// cycle. Entries render as "NAME: content" joined by newlines.
TurnContext assemble_input(std::span<const CycleEntry> cycle,
                           const AgentSpec& recipient,
                           std::span<const AgentSpec> roster);

/// System message, the agent's own history, then the new input as a user
/// message.
std::string chat_complete(const AgentSpec& agent,
                          std::span<const ChatMessage> history,
                          const TurnContext& input, ChatBackend& client);

class TranscriptSink {
 public:
  virtual ~TranscriptSink() = default;
  virtual void append(const Turn& turn) = 0;
};

/// Writes one jsonl line per turn and flushes it immediately.
class JsonlTranscriptWriter : public TranscriptSink {
 public:
  explicit JsonlTranscriptWriter(const std::filesystem::path& path);
  void append(const Turn& turn) override;

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

enum class StopReason { interaction_cap, token_limit, wall_clock };

std::string_view to_string(StopReason reason);

struct SessionResult {
  Transcript transcript;
  StopReason stop = StopReason::interaction_cap;
  std::string detail;
};

/// Round-robin GM, P1, P2, P3, GM, ... starting from the opening prompt.
/// After the players' last allowed turn the GM answers once more, then the
/// session ends. Token-limit errors end the session normally; any other
/// error propagates. Either way every finished turn is already in the sink.
SessionResult run_session(const SessionConfig& config, ChatBackend& client,
                          TranscriptSink* sink = nullptr);

/// jsonl lines, or "NAME: content" lines with newlines folded to spaces.
/// Throws InputError on an empty transcript.
std::string render_transcript(const Transcript& transcript,
                              TranscriptFormat format);

/// Reads a JSON session file. Relative adventure/character paths resolve
/// against the file's directory.
SessionConfig load_session_config(const std::filesystem::path& path);
SessionConfig parse_session_config(std::string_view json,
                                   const std::filesystem::path& base_dir);

}  // namespace orality
