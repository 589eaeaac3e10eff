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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orality {

enum class ParseLevel { plain = 0, pos = 1, full_dependency = 2 };

std::string_view to_string(ParseLevel level);

struct AnnotatedToken {
  std::string surface;
  std::string lower;
  std::optional<std::string> upos;
  std::optional<std::string> xpos;
  std::optional<int> head;  // 0 = root
  std::optional<std::string> deprel;
  int index = 0;  // 1-based position in the sentence
};

struct Sentence {
  std::vector<AnnotatedToken> tokens;
  std::optional<int> root_index;
  // From a "# speaker = NAME" comment or the transcript turn it came from.
  std::optional<std::string> speaker;

  std::size_t size() const { return tokens.size(); }
  bool has_dependencies() const;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  ParseLevel parse_level = ParseLevel::plain;

  std::size_t token_count() const;
};

/// Checks index order, head range, self-loops, the single root and
/// acyclicity. Fills root_index. Throws InputError.
void validate_dependencies(Sentence& sentence);

/// CoNLL-U (UD v2): ten tab-separated columns, blank line between
/// sentences, "#" comments. Multiword ranges ("3-4") and empty nodes ("5.1")
/// are skipped. A document whose HEAD column is "_" throughout is read at
/// POS level (or plain when no tags are present either).
Document read_conllu(std::string_view text, std::string id = {});

std::string write_conllu(const Document& doc);

/// Whitespace tokenization with leading/trailing punctuation split off;
/// sentence breaks after tokens ending in '.', '!' or '?'.
/// Throws InputError("empty document") when no tokens remain.
Document read_plain(std::string_view text, std::string id = {});

}  // namespace orality
