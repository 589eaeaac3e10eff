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

#include "orality/transcript.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

#include "orality/error.hpp"
#include "orality/text.hpp"

namespace orality {

namespace {

using ordered_json = nlohmann::ordered_json;

bool looks_like_speaker_id(std::string_view s) {
  bool has_upper = false;
  for (char c : s) {
    if (c >= 'A' && c <= 'Z') {
      has_upper = true;
    } else if (c >= 'a' && c <= 'z') {
      return false;
    } else if (!(std::isdigit(static_cast<unsigned char>(c)) || c == ' ' ||
                 c == '-' || c == '\'' || c == '.' || c == '_')) {
      return false;
    }
  }
  return has_upper;
}

Transcript read_jsonl(std::string_view bytes, const SpeakerRoles& roles) {
  Transcript t;
  std::size_t line_no = 0;
  for (std::string_view line : text::lines(bytes)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    const std::string where = "transcript: line " + std::to_string(line_no);
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(where + ": invalid JSON (" + e.what() + ")");
    }
    if (!obj.is_object() || !obj.contains("speaker") ||
        !obj["speaker"].is_string() || !obj.contains("content") ||
        !obj["content"].is_string()) {
      throw InputError(where + ": missing speaker/content");
    }
    Turn turn;
    turn.turn_index = static_cast<int>(t.turns.size());
    if (obj.contains("turn") && !obj["turn"].is_null()) {
      if (!obj["turn"].is_number_integer() ||
          obj["turn"].get<int>() != turn.turn_index) {
        throw InputError(where + ": turn index must be " +
                         std::to_string(turn.turn_index));
      }
    }
    turn.speaker = obj["speaker"].get<std::string>();
    turn.content = obj["content"].get<std::string>();
    if (roles.known(turn.speaker)) {
      turn.role = roles.resolve(turn.speaker);
    } else if (obj.contains("role") && obj["role"].is_string()) {
      auto role = parse_role(obj["role"].get<std::string>());
      if (!role) throw InputError(where + ": unknown role value");
      turn.role = *role;
    }
    if (obj.contains("model") && obj["model"].is_string()) {
      turn.model = obj["model"].get<std::string>();
    }
    if (obj.contains("temperature") && obj["temperature"].is_number()) {
      turn.temperature = obj["temperature"].get<double>();
    }
    t.turns.push_back(std::move(turn));
  }
  return t;
}

Transcript read_speaker_lines(std::string_view bytes, const SpeakerRoles& roles) {
  Transcript t;
  std::size_t line_no = 0;
  for (std::string_view line : text::lines(bytes)) {
    ++line_no;
    std::string_view trimmed = text::trim(line);
    if (trimmed.empty()) continue;
    auto colon = trimmed.find(':');
    if (colon != std::string_view::npos && colon > 0) {
      std::string_view prefix = text::trim(trimmed.substr(0, colon));
      if (!prefix.empty() &&
          (looks_like_speaker_id(prefix) || roles.known(prefix))) {
        Turn turn;
        turn.turn_index = static_cast<int>(t.turns.size());
        turn.speaker = std::string(prefix);
        turn.role = roles.resolve(prefix);
        turn.content = std::string(text::trim(trimmed.substr(colon + 1)));
        t.turns.push_back(std::move(turn));
        continue;
      }
    }
    if (t.turns.empty()) {
      throw InputError("transcript: line " + std::to_string(line_no) +
                       ": text before the first speaker");
    }
    std::string& content = t.turns.back().content;
    if (!content.empty()) content.push_back('\n');
    content += trimmed;
  }
  return t;
}

void append_turn_sentences(Document& doc, const Turn& turn) {
  Document part = read_plain(turn.content);
  for (Sentence& s : part.sentences) {
    s.speaker = turn.speaker;
    doc.sentences.push_back(std::move(s));
  }
}

}  // namespace

std::string_view to_string(Role role) {
  switch (role) {
    case Role::gm: return "gm";
    case Role::player: return "player";
    case Role::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<Role> parse_role(std::string_view name) {
  std::string lower = text::to_lower(text::trim(name));
  if (lower == "gm") return Role::gm;
  if (lower == "player") return Role::player;
  if (lower == "unknown") return Role::unknown;
  return std::nullopt;
}

SpeakerRoles::SpeakerRoles(const std::vector<std::string>& gm,
                           const std::vector<std::string>& players) {
  for (const std::string& s : gm) gm_.insert(text::to_upper(text::trim(s)));
  for (const std::string& s : players) {
    players_.insert(text::to_upper(text::trim(s)));
  }
}

Role SpeakerRoles::resolve(std::string_view speaker) const {
  std::string key = text::to_upper(text::trim(speaker));
  if (gm_.contains(key)) return Role::gm;
  if (players_.contains(key)) return Role::player;
  return Role::unknown;
}

bool SpeakerRoles::known(std::string_view speaker) const {
  return resolve(speaker) != Role::unknown;
}

Transcript read_transcript(std::string_view bytes, TranscriptFormat format,
                           const SpeakerRoles& roles) {
  Transcript t = format == TranscriptFormat::jsonl
                     ? read_jsonl(bytes, roles)
                     : read_speaker_lines(bytes, roles);
  validate_transcript(t);
  return t;
}

std::string turn_to_jsonl(const Turn& turn) {
  ordered_json obj;
  obj["turn"] = turn.turn_index;
  obj["speaker"] = turn.speaker;
  obj["role"] = to_string(turn.role);
  obj["content"] = turn.content;
  obj["model"] = turn.model ? ordered_json(*turn.model) : ordered_json(nullptr);
  obj["temperature"] =
      turn.temperature ? ordered_json(*turn.temperature) : ordered_json(nullptr);
  return obj.dump();
}

void validate_transcript(const Transcript& transcript) {
  for (std::size_t i = 0; i < transcript.turns.size(); ++i) {
    const Turn& turn = transcript.turns[i];
    if (turn.turn_index != static_cast<int>(i)) {
      throw InputError("transcript: turn " + std::to_string(i) +
                       " has index " + std::to_string(turn.turn_index));
    }
    if (text::trim(turn.content).empty()) {
      throw InputError("transcript: turn " + std::to_string(i) +
                       " has empty content");
    }
  }
}

RoleSplit split_roles(const Transcript& transcript, const SplitOptions& options) {
  RoleSplit split;
  split.gm.id = "gm";
  split.pc.id = "pc";
  for (const Turn& turn : transcript.turns) {
    switch (turn.role) {
      case Role::gm:
        append_turn_sentences(split.gm, turn);
        split.gm_turns.push_back(turn.turn_index);
        break;
      case Role::player:
        append_turn_sentences(split.pc, turn);
        split.pc_turns.push_back(turn.turn_index);
        break;
      case Role::unknown:
        if (!options.ignore_unknown) {
          throw InputError("turn " + std::to_string(turn.turn_index) +
                           ": speaker \"" + turn.speaker + "\" has no role");
        }
        break;
    }
  }
  if (split.gm_turns.empty() || split.pc_turns.empty()) {
    throw InputError("degenerate split");
  }
  return split;
}

RoleSplit split_document_by_speaker(const Document& doc,
                                    const SpeakerRoles& roles,
                                    const SplitOptions& options) {
  RoleSplit split;
  split.gm.id = doc.id + "-DM";
  split.pc.id = doc.id + "-PC";
  split.gm.parse_level = doc.parse_level;
  split.pc.parse_level = doc.parse_level;
  for (const Sentence& s : doc.sentences) {
    Role role = s.speaker ? roles.resolve(*s.speaker) : Role::unknown;
    if (role == Role::gm) {
      split.gm.sentences.push_back(s);
    } else if (role == Role::player) {
      split.pc.sentences.push_back(s);
    } else if (!options.ignore_unknown) {
      throw InputError(doc.id + ": sentence speaker \"" +
                       s.speaker.value_or("") + "\" has no role");
    }
  }
  if (split.gm.sentences.empty() || split.pc.sentences.empty()) {
    throw InputError("degenerate split");
  }
  return split;
}

}  // namespace orality
