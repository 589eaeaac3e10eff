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
#include <string_view>

#include "orality/document.hpp"
#include "orality/lexicons.hpp"

namespace orality {

/// Clause metrics read UD deprels; "csub" in the literature is UD "csubj".
/// Subtypes match on their base label: "acl:relcl" is an acl.
bool is_subordinate_deprel(std::string_view deprel);
bool is_relative_deprel(std::string_view deprel);
std::string_view base_deprel(std::string_view deprel);

/// Mean tokens per sentence, punctuation included.
double mean_sentence_length(const Document& doc);

struct ClauseRatios {
  double subordinate_per_sentence = 0.0;
  double relative_per_sentence = 0.0;
};

ClauseRatios clause_ratios(const Document& doc);

/// Mean linear distance of non-root tokens from the root.
double sentence_root_distance(const Sentence& sentence);
/// Longest root-to-node path, in edges.
int sentence_graph_depth(const Sentence& sentence);

/// Sentence means, each sentence weighted equally.
double root_distance(const Document& doc);
double graph_depth(const Document& doc);

double nmod_rate(const Document& doc);

struct VerbProfile {
  double present_ratio = 0.0;     // VB, VBZ, VBP
  double past_ratio = 0.0;        // VBD
  double participle_ratio = 0.0;  // VBG, VBN
  double first_person_ratio = 0.0;
  std::size_t verb_count = 0;
  std::size_t pronoun_count = 0;  // PRP + PRP$
};

/// Tense shares over verb tokens (XPOS) and the share of first-person
/// singular forms among PRP/PRP$ tokens. Throws PreconditionError("no verbs").
/// With no pronouns, first_person_ratio is 0 and pronoun_count tells why.
VerbProfile verb_profile(const Document& doc);
VerbProfile verb_profile(const Document& doc, const Lexicon& first_person);

struct SyntaxProfile {
  double mean_sentence_length = 0.0;
  double subordinate_per_sentence = 0.0;
  double relative_per_sentence = 0.0;
  double mean_root_distance = 0.0;
  double mean_graph_depth = 0.0;
  double nmod_per_sentence = 0.0;
};

/// Requires a full dependency parse.
SyntaxProfile syntax_profile(const Document& doc);

}  // namespace orality
