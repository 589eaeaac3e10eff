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

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "orality/document.hpp"

namespace orality {

enum class Role { gm, player, unknown };

std::string_view to_string(Role role);
std::optional<Role> parse_role(std::string_view name);

struct Turn {
  int turn_index = 0;
  std::string speaker;
  Role role = Role::unknown;
  std::string content;
  std::optional<std::string> model;
  std::optional<double> temperature;
};

struct Transcript {
  std::vector<Turn> turns;
};

enum class TranscriptFormat { jsonl, speaker_lines };

/// Speaker names that identify the GM and the players. Matching ignores case.
class SpeakerRoles {
 public:
  SpeakerRoles() = default;
  SpeakerRoles(const std::vector<std::string>& gm,
               const std::vector<std::string>& players);

  Role resolve(std::string_view speaker) const;
  bool known(std::string_view speaker) const;
  bool empty() const { return gm_.empty() && players_.empty(); }

 private:
  std::set<std::string> gm_;
  std::set<std::string> players_;
};

/// jsonl: one object per line with fields turn, speaker, role, content,
/// model, temperature (turn/role/model/temperature optional).
/// speaker-lines: "SPEAKER: content"; the speaker is an all-caps name or one
/// listed in roles; other lines continue the previous turn.
/// A speaker listed in roles takes that role; otherwise a jsonl "role" field
/// is used; otherwise the role is unknown.
Transcript read_transcript(std::string_view bytes, TranscriptFormat format,
                           const SpeakerRoles& roles = {});

/// One transcript line in the jsonl schema (no trailing newline).
std::string turn_to_jsonl(const Turn& turn);

/// Checks turn indices run 0,1,2,... and contents are non-blank.
void validate_transcript(const Transcript& transcript);

struct SplitOptions {
  bool ignore_unknown = false;
};

struct RoleSplit {
  Document gm;
  Document pc;
  std::vector<int> gm_turns;
  std::vector<int> pc_turns;
};

/// GM turns form one plain document, player turns the other. Throws
/// InputError on unknown roles (unless ignored) and "degenerate split" when
/// either side ends up empty.
RoleSplit split_roles(const Transcript& transcript,
                      const SplitOptions& options = {});

/// Same partition for a parsed document whose sentences carry speakers.
/// Parse level is preserved; turn lists stay empty.
RoleSplit split_document_by_speaker(const Document& doc,
                                    const SpeakerRoles& roles,
                                    const SplitOptions& options = {});

}  // namespace orality
