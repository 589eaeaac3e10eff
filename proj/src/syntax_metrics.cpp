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

#include "orality/syntax_metrics.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <vector>

#include "orality/error.hpp"
#include "orality/text.hpp"

namespace orality {

namespace {

constexpr std::array<std::string_view, 6> kSubordinateLabels = {
    "csubj", "ccomp", "advcl", "acl", "xcomp", "parataxis"};
constexpr std::array<std::string_view, 2> kRelativeLabels = {"acl:relcl",
                                                             "advcl:relcl"};

void require_parse(const Document& doc) {
  if (doc.parse_level != ParseLevel::full_dependency) {
    throw PreconditionError("requires dependency parse");
  }
}

void require_sentences(const Document& doc) {
  if (doc.sentences.empty()) throw PreconditionError("document has no sentences");
}

template <typename Pred>
std::size_t count_deprels(const Document& doc, Pred pred) {
  std::size_t n = 0;
  for (const Sentence& s : doc.sentences) {
    for (const AnnotatedToken& t : s.tokens) {
      if (t.deprel && pred(text::to_lower(*t.deprel))) ++n;
    }
  }
  return n;
}

double per_sentence(const Document& doc, std::size_t count) {
  return static_cast<double>(count) / static_cast<double>(doc.sentences.size());
}

bool xpos_is(const AnnotatedToken& t, std::initializer_list<std::string_view> tags) {
  if (!t.xpos) return false;
  return std::find(tags.begin(), tags.end(), *t.xpos) != tags.end();
}

}  // namespace

std::string_view base_deprel(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

bool is_subordinate_deprel(std::string_view deprel) {
  std::string_view base = base_deprel(deprel);
  return std::find(kSubordinateLabels.begin(), kSubordinateLabels.end(), base) !=
         kSubordinateLabels.end();
}

bool is_relative_deprel(std::string_view deprel) {
  return std::find(kRelativeLabels.begin(), kRelativeLabels.end(), deprel) !=
         kRelativeLabels.end();
}

double mean_sentence_length(const Document& doc) {
  require_sentences(doc);
  return per_sentence(doc, doc.token_count());
}

ClauseRatios clause_ratios(const Document& doc) {
  require_parse(doc);
  require_sentences(doc);
  return ClauseRatios{
      .subordinate_per_sentence =
          per_sentence(doc, count_deprels(doc, [](std::string_view d) {
                         return is_subordinate_deprel(d);
                       })),
      .relative_per_sentence =
          per_sentence(doc, count_deprels(doc, [](std::string_view d) {
                         return is_relative_deprel(d);
                       })),
  };
}

double sentence_root_distance(const Sentence& sentence) {
  if (!sentence.root_index) throw PreconditionError("sentence lacks a root");
  if (sentence.tokens.size() < 2) return 0.0;
  const int root = *sentence.root_index;
  long total = 0;
  for (const AnnotatedToken& t : sentence.tokens) {
    if (t.index != root) total += std::labs(t.index - root);
  }
  return static_cast<double>(total) /
         static_cast<double>(sentence.tokens.size() - 1);
}

int sentence_graph_depth(const Sentence& sentence) {
  if (!sentence.root_index) throw PreconditionError("sentence lacks a root");
  const std::size_t n = sentence.tokens.size();
  std::vector<int> depth(n + 1, -1);
  depth[0] = -1;
  int deepest = 0;
  for (std::size_t start = 1; start <= n; ++start) {
    // Walk up until a node of known depth, then unwind.
    std::vector<std::size_t> path;
    std::size_t node = start;
    while (depth[node] < 0) {
      const AnnotatedToken& t = sentence.tokens[node - 1];
      if (!t.head) throw PreconditionError("sentence lacks a root");
      if (*t.head == 0) {
        depth[node] = 0;
        break;
      }
      path.push_back(node);
      if (path.size() > n) throw PreconditionError("dependency cycle");
      node = static_cast<std::size_t>(*t.head);
    }
    int d = depth[node];
    for (auto it = path.rbegin(); it != path.rend(); ++it) depth[*it] = ++d;
    deepest = std::max(deepest, depth[start]);
  }
  return deepest;
}

double root_distance(const Document& doc) {
  require_parse(doc);
  require_sentences(doc);
  double total = 0.0;
  for (const Sentence& s : doc.sentences) total += sentence_root_distance(s);
  return total / static_cast<double>(doc.sentences.size());
}

double graph_depth(const Document& doc) {
  require_parse(doc);
  require_sentences(doc);
  double total = 0.0;
  for (const Sentence& s : doc.sentences) total += sentence_graph_depth(s);
  return total / static_cast<double>(doc.sentences.size());
}

double nmod_rate(const Document& doc) {
  require_parse(doc);
  require_sentences(doc);
  return per_sentence(doc, count_deprels(doc, [](std::string_view d) {
                        return base_deprel(d) == "nmod";
                      }));
}

VerbProfile verb_profile(const Document& doc) {
  return verb_profile(doc, default_first_person_lexicon());
}

VerbProfile verb_profile(const Document& doc, const Lexicon& first_person) {
  if (doc.parse_level == ParseLevel::plain) {
    throw PreconditionError("requires XPOS tags");
  }
  std::size_t present = 0, past = 0, participle = 0;
  std::size_t pronouns = 0, first = 0;
  for (const Sentence& s : doc.sentences) {
    for (const AnnotatedToken& t : s.tokens) {
      if (xpos_is(t, {"VB", "VBZ", "VBP"})) {
        ++present;
      } else if (xpos_is(t, {"VBD"})) {
        ++past;
      } else if (xpos_is(t, {"VBG", "VBN"})) {
        ++participle;
      } else if (xpos_is(t, {"PRP", "PRP$"})) {
        ++pronouns;
        if (first_person.contains(t.lower)) ++first;
      }
    }
  }
  VerbProfile p;
  p.verb_count = present + past + participle;
  p.pronoun_count = pronouns;
  if (p.verb_count == 0) throw PreconditionError("no verbs");
  const double verbs = static_cast<double>(p.verb_count);
  p.present_ratio = present / verbs;
  p.past_ratio = past / verbs;
  p.participle_ratio = participle / verbs;
  p.first_person_ratio =
      pronouns == 0 ? 0.0
                    : static_cast<double>(first) / static_cast<double>(pronouns);
  return p;
}

SyntaxProfile syntax_profile(const Document& doc) {
  ClauseRatios clauses = clause_ratios(doc);
  return SyntaxProfile{
      .mean_sentence_length = mean_sentence_length(doc),
      .subordinate_per_sentence = clauses.subordinate_per_sentence,
      .relative_per_sentence = clauses.relative_per_sentence,
      .mean_root_distance = root_distance(doc),
      .mean_graph_depth = graph_depth(doc),
      .nmod_per_sentence = nmod_rate(doc),
  };
}

}  // namespace orality
