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

#include "orality/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "orality/error.hpp"
#include "orality/text.hpp"

namespace orality {

namespace {

std::optional<std::string> column_value(std::string_view col) {
  if (col == "_") return std::nullopt;
  return std::string(col);
}

bool is_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

bool is_terminal_punct(std::string_view token) {
  return token.find_first_of(".!?") != std::string_view::npos;
}

AnnotatedToken make_token(std::string_view surface, int index) {
  AnnotatedToken tok;
  tok.surface = std::string(surface);
  tok.lower = text::to_lower(surface);
  tok.index = index;
  return tok;
}

// Splits a run of punctuation into tokens, grouping repeats ("...", "!!").
void push_punct_run(std::string_view run, std::vector<std::string>& out) {
  std::size_t i = 0;
  while (i < run.size()) {
    std::size_t j = i + 1;
    while (j < run.size() && run[j] == run[i]) ++j;
    out.emplace_back(run.substr(i, j - i));
    i = j;
  }
}

}  // namespace

std::string_view to_string(ParseLevel level) {
  switch (level) {
    case ParseLevel::plain: return "plain";
    case ParseLevel::pos: return "pos";
    case ParseLevel::full_dependency: return "full-dependency";
  }
  return "?";
}

bool Sentence::has_dependencies() const {
  return std::any_of(tokens.begin(), tokens.end(),
                     [](const AnnotatedToken& t) { return t.head.has_value(); });
}

std::size_t Document::token_count() const {
  std::size_t n = 0;
  for (const Sentence& s : sentences) n += s.tokens.size();
  return n;
}

void validate_dependencies(Sentence& sentence) {
  const int n = static_cast<int>(sentence.tokens.size());
  sentence.root_index.reset();
  if (!sentence.has_dependencies()) return;

  std::vector<int> heads(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const AnnotatedToken& tok = sentence.tokens[static_cast<std::size_t>(i)];
    if (tok.index != i + 1) {
      throw InputError("token index " + std::to_string(tok.index) +
                       " out of sequence");
    }
    if (!tok.head) {
      throw InputError("token " + std::to_string(tok.index) +
                       ": incomplete dependency annotation");
    }
    int head = *tok.head;
    if (head < 0 || head > n) {
      throw InputError("token " + std::to_string(tok.index) + ": head " +
                       std::to_string(head) + " out of range");
    }
    if (head == tok.index) {
      throw InputError("token " + std::to_string(tok.index) + ": self-loop");
    }
    if (tok.deprel && text::to_lower(*tok.deprel) == "root" && head != 0) {
      throw InputError("token " + std::to_string(tok.index) +
                       ": deprel root with non-zero head");
    }
    if (head == 0) {
      if (sentence.root_index) {
        throw InputError("sentence has more than one root");
      }
      sentence.root_index = tok.index;
    }
    heads[static_cast<std::size_t>(i) + 1] = head;
  }
  if (!sentence.root_index) throw InputError("sentence has no root");

  // 0 = unvisited, 1 = on current path, 2 = reaches the root.
  std::vector<char> state(heads.size(), 0);
  state[0] = 2;
  std::vector<int> path;
  for (int start = 1; start <= n; ++start) {
    int node = start;
    path.clear();
    while (state[static_cast<std::size_t>(node)] == 0) {
      state[static_cast<std::size_t>(node)] = 1;
      path.push_back(node);
      node = heads[static_cast<std::size_t>(node)];
    }
    if (state[static_cast<std::size_t>(node)] == 1) {
      throw InputError("dependency cycle");
    }
    for (int p : path) state[static_cast<std::size_t>(p)] = 2;
  }
}

Document read_conllu(std::string_view input, std::string id) {
  Document doc;
  doc.id = std::move(id);

  Sentence current;
  std::size_t line_no = 0;
  std::size_t sentence_start_line = 1;

  auto finish_sentence = [&]() {
    if (current.tokens.empty()) {
      current = Sentence{};
      return;
    }
    try {
      validate_dependencies(current);
    } catch (const InputError& e) {
      throw InputError("conllu: sentence starting at line " +
                       std::to_string(sentence_start_line) + ": " + e.what());
    }
    doc.sentences.push_back(std::move(current));
    current = Sentence{};
  };

  for (std::string_view line : text::lines(input)) {
    ++line_no;
    if (text::trim(line).empty()) {
      finish_sentence();
      continue;
    }
    if (line.front() == '#') {
      std::string_view body = text::trim(line.substr(1));
      if (body.rfind("speaker", 0) == 0) {
        auto eq = body.find('=');
        if (eq != std::string_view::npos) {
          current.speaker = std::string(text::trim(body.substr(eq + 1)));
        }
      }
      continue;
    }
    auto cols = text::split(line, '\t');
    if (cols.size() != 10) {
      throw InputError("conllu: line " + std::to_string(line_no) +
                       ": expected 10 tab-separated columns, got " +
                       std::to_string(cols.size()));
    }
    std::string_view id_col = cols[0];
    if (id_col.find_first_of("-.") != std::string_view::npos) continue;
    int index = 0;
    auto [p, ec] =
        std::from_chars(id_col.data(), id_col.data() + id_col.size(), index);
    if (ec != std::errc() || p != id_col.data() + id_col.size()) {
      throw InputError("conllu: line " + std::to_string(line_no) +
                       ": bad token id \"" + std::string(id_col) + "\"");
    }
    if (current.tokens.empty()) sentence_start_line = line_no;
    if (index != static_cast<int>(current.tokens.size()) + 1) {
      throw InputError("conllu: line " + std::to_string(line_no) +
                       ": token id " + std::to_string(index) +
                       " out of sequence");
    }
    AnnotatedToken tok = make_token(cols[1], index);
    tok.upos = column_value(cols[3]);
    tok.xpos = column_value(cols[4]);
    tok.deprel = column_value(cols[7]);
    if (cols[6] != "_") {
      int head = 0;
      auto [hp, hec] =
          std::from_chars(cols[6].data(), cols[6].data() + cols[6].size(), head);
      if (hec != std::errc() || hp != cols[6].data() + cols[6].size()) {
        throw InputError("conllu: line " + std::to_string(line_no) +
                         ": bad head \"" + std::string(cols[6]) + "\"");
      }
      tok.head = head;
    }
    current.tokens.push_back(std::move(tok));
  }
  finish_sentence();

  if (doc.sentences.empty()) throw InputError("conllu: empty document");

  std::size_t with_deps = 0;
  bool tagged = false;
  for (const Sentence& s : doc.sentences) {
    if (s.root_index) ++with_deps;
    for (const AnnotatedToken& t : s.tokens) {
      if (t.xpos || t.upos) tagged = true;
    }
  }
  if (with_deps == doc.sentences.size()) {
    doc.parse_level = ParseLevel::full_dependency;
  } else if (with_deps == 0) {
    doc.parse_level = tagged ? ParseLevel::pos : ParseLevel::plain;
  } else {
    throw InputError("conllu: " + std::to_string(doc.sentences.size() - with_deps) +
                     " sentences lack dependency annotation");
  }
  return doc;
}

std::string write_conllu(const Document& doc) {
  std::string out;
  if (!doc.id.empty()) out += "# doc_id = " + doc.id + "\n";
  for (const Sentence& s : doc.sentences) {
    if (s.speaker) out += "# speaker = " + *s.speaker + "\n";
    for (const AnnotatedToken& t : s.tokens) {
      out += std::to_string(t.index);
      out += '\t' + t.surface;
      out += "\t_";
      out += '\t' + t.upos.value_or("_");
      out += '\t' + t.xpos.value_or("_");
      out += "\t_";
      out += '\t' + (t.head ? std::to_string(*t.head) : std::string("_"));
      out += '\t' + t.deprel.value_or("_");
      out += "\t_\t_\n";
    }
    out += '\n';
  }
  return out;
}

Document read_plain(std::string_view input, std::string id) {
  Document doc;
  doc.id = std::move(id);
  doc.parse_level = ParseLevel::plain;

  Sentence current;
  auto flush = [&]() {
    if (!current.tokens.empty()) doc.sentences.push_back(std::move(current));
    current = Sentence{};
  };
  auto push = [&](std::string_view surface) {
    current.tokens.push_back(
        make_token(surface, static_cast<int>(current.tokens.size()) + 1));
  };

  std::vector<std::string> pieces;
  for (std::string_view chunk : text::split_whitespace(input)) {
    std::size_t first = 0;
    while (first < chunk.size() && is_punct(chunk[first])) ++first;
    bool ends_sentence = false;
    if (first == chunk.size()) {
      pieces.clear();
      push_punct_run(chunk, pieces);
      for (const std::string& p : pieces) push(p);
      ends_sentence = is_terminal_punct(chunk);
    } else {
      std::size_t last = chunk.size();
      while (last > first && is_punct(chunk[last - 1])) --last;
      pieces.clear();
      push_punct_run(chunk.substr(0, first), pieces);
      for (const std::string& p : pieces) push(p);
      push(chunk.substr(first, last - first));
      std::string_view trailing = chunk.substr(last);
      pieces.clear();
      push_punct_run(trailing, pieces);
      for (const std::string& p : pieces) push(p);
      ends_sentence = is_terminal_punct(trailing);
    }
    if (ends_sentence) flush();
  }
  flush();

  if (doc.sentences.empty()) throw InputError("empty document");
  return doc;
}

}  // namespace orality
