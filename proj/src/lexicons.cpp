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

#include "orality/lexicons.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "orality/error.hpp"
#include "orality/text.hpp"

namespace orality {

namespace {

constexpr std::array<std::string_view, 8> kCategoryNames = {
    "freq-band-1",       "freq-band-2",       "academic",
    "deictic",           "attributive-adjective", "emphatic-particle",
    "first-person-pronoun", "article"};

std::size_t word_count(std::string_view entry) {
  return static_cast<std::size_t>(std::count(entry.begin(), entry.end(), ' ')) + 1;
}

std::string join_words(std::span<const std::string> words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(' ');
    out += words[i];
  }
  return out;
}

std::vector<std::string> read_list_lines(std::string_view text,
                                         const std::string& source) {
  std::vector<std::string> out;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  for (std::string_view line : text::lines(text)) {
    ++line_no;
    std::string_view t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::string entry = text::normalize_entry(t);
    if (!seen.insert(entry).second) {
      throw InputError(source + ":" + std::to_string(line_no) +
                       ": duplicate entry \"" + entry + "\"");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

std::string_view to_string(LexiconCategory category) {
  return kCategoryNames[static_cast<std::size_t>(category)];
}

std::optional<LexiconCategory> parse_lexicon_category(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (kCategoryNames[i] == name) return static_cast<LexiconCategory>(i);
  }
  return std::nullopt;
}

Lexicon::Lexicon(std::string name, LexiconCategory category,
                 std::span<const std::string> entries)
    : name_(std::move(name)), category_(category) {
  for (const std::string& raw : entries) {
    std::string entry = text::normalize_entry(raw);
    if (entry.empty()) continue;
    if (!entries_.insert(entry).second) {
      throw InputError("lexicon " + name_ + ": duplicate entry \"" + entry +
                       "\"");
    }
    max_words_ = std::max(max_words_, word_count(entry));
  }
  if (entries_.empty()) throw InputError("lexicon " + name_ + ": empty lexicon");
}

std::size_t Lexicon::match_at(std::span<const std::string> tokens,
                              std::size_t pos) const {
  if (pos >= tokens.size()) return 0;
  std::size_t longest = std::min(max_words_, tokens.size() - pos);
  for (std::size_t len = longest; len >= 1; --len) {
    if (len == 1) {
      return entries_.contains(tokens[pos]) ? 1 : 0;
    }
    if (entries_.contains(join_words(tokens.subspan(pos, len)))) return len;
  }
  return 0;
}

Lexicon parse_lexicon(std::string_view text, std::string name,
                      LexiconCategory category) {
  std::vector<std::string> entries = read_list_lines(text, name);
  if (entries.empty()) throw InputError("lexicon " + name + ": empty lexicon");
  return Lexicon(std::move(name), category, entries);
}

Lexicon load_lexicon(const std::filesystem::path& path,
                     LexiconCategory category) {
  return parse_lexicon(text::read_file(path), path.string(), category);
}

std::string dump_lexicon(const Lexicon& lexicon) {
  std::string out = "# " + std::string(to_string(lexicon.category())) + "\n";
  for (const std::string& entry : lexicon.entries()) {
    out += entry;
    out.push_back('\n');
  }
  return out;
}

Lexicon article_lexicon() {
  const std::vector<std::string> entries = {"a", "an", "the"};
  return Lexicon("articles", LexiconCategory::article, entries);
}

Lexicon default_first_person_lexicon() {
  const std::vector<std::string> entries = {"i", "me", "mine", "myself", "my"};
  return Lexicon("first-person", LexiconCategory::first_person_pronoun, entries);
}

void ConcretenessTable::add(std::string_view word, double value) {
  if (!std::isfinite(value) || value < kMinValue || value > kMaxValue) {
    throw InputError("concreteness value for \"" + std::string(word) +
                     "\" outside [100, 700]");
  }
  std::string key = text::normalize_entry(word);
  if (key.empty()) throw InputError("concreteness: empty word");
  if (!values_.emplace(std::move(key), value).second) {
    throw InputError("concreteness: duplicate word \"" + std::string(word) +
                     "\"");
  }
}

std::optional<double> ConcretenessTable::lookup(std::string_view word) const {
  auto it = text::is_lowercase(word) ? values_.find(word)
                                     : values_.find(text::to_lower(word));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

ConcretenessTable parse_concreteness(std::string_view csv) {
  ConcretenessTable table;
  bool header_seen = false;
  std::size_t line_no = 0;
  for (std::string_view line : text::lines(csv)) {
    ++line_no;
    std::string_view t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto cols = text::split(t, ',');
    if (!header_seen) {
      if (cols.size() != 2 || text::trim(cols[0]) != "word" ||
          text::trim(cols[1]) != "value") {
        throw InputError("concreteness: line " + std::to_string(line_no) +
                         ": expected header \"word,value\"");
      }
      header_seen = true;
      continue;
    }
    if (cols.size() != 2) {
      throw InputError("concreteness: line " + std::to_string(line_no) +
                       ": expected 2 columns");
    }
    std::string_view word = text::trim(cols[0]);
    std::string_view num = text::trim(cols[1]);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc() || ptr != num.data() + num.size()) {
      throw InputError("concreteness: line " + std::to_string(line_no) +
                       ": non-numeric value \"" + std::string(num) + "\"");
    }
    try {
      table.add(word, value);
    } catch (const InputError& e) {
      throw InputError("concreteness: line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  if (!header_seen) throw InputError("concreteness: missing header");
  return table;
}

ConcretenessTable load_concreteness(const std::filesystem::path& path) {
  return parse_concreteness(text::read_file(path));
}

std::string_view to_string(ConnectiveClass cls) {
  switch (cls) {
    case ConnectiveClass::additive: return "additive";
    case ConnectiveClass::causal: return "causal";
    case ConnectiveClass::temporal: return "temporal";
    case ConnectiveClass::logical: return "logical";
  }
  return "?";
}

std::string_view to_string(Polarity polarity) {
  return polarity == Polarity::positive ? "positive" : "negative";
}

void ConnectiveLexicon::set_entries(ConnectiveClass cls, Polarity polarity,
                                    std::span<const std::string> entries) {
  const std::string label = std::string(to_string(cls)) + "-" +
                            std::string(to_string(polarity));
  if (entries.size() > kMaxEntriesPerList) {
    throw InputError("connectives " + label + ": " +
                     std::to_string(entries.size()) + " entries, at most 20");
  }
  std::vector<std::string> normalized;
  for (const std::string& raw : entries) {
    std::string entry = text::normalize_entry(raw);
    if (entry.empty()) throw InputError("connectives " + label + ": empty entry");
    if (std::find(normalized.begin(), normalized.end(), entry) !=
        normalized.end()) {
      throw InputError("connectives " + label + ": duplicate entry \"" + entry +
                       "\"");
    }
    normalized.push_back(std::move(entry));
  }
  lists_[static_cast<std::size_t>(cls)][static_cast<std::size_t>(polarity)] =
      std::move(normalized);
  rebuild_index();
}

const std::vector<std::string>& ConnectiveLexicon::entries(
    ConnectiveClass cls, Polarity polarity) const {
  return lists_[static_cast<std::size_t>(cls)][static_cast<std::size_t>(polarity)];
}

void ConnectiveLexicon::rebuild_index() {
  index_.clear();
  max_words_ = 1;
  for (ConnectiveClass cls : kConnectiveClasses) {
    for (Polarity pol : kPolarities) {
      for (const std::string& entry : entries(cls, pol)) {
        index_[entry].insert(ConnectiveTag{cls, pol});
        max_words_ = std::max(max_words_, word_count(entry));
      }
    }
  }
}

const std::set<ConnectiveTag>* ConnectiveLexicon::tags_for(
    std::span<const std::string> words) const {
  auto it = words.size() == 1 ? index_.find(words[0])
                              : index_.find(join_words(words));
  return it == index_.end() ? nullptr : &it->second;
}

std::size_t ConnectiveLexicon::total_entries() const {
  std::size_t n = 0;
  for (const auto& by_pol : lists_) {
    for (const auto& list : by_pol) n += list.size();
  }
  return n;
}

std::size_t connective_match_length(std::span<const std::string> window,
                                    const ConnectiveLexicon& lexicon) {
  std::size_t longest = std::min(window.size(), lexicon.max_words());
  for (std::size_t len = longest; len >= 1; --len) {
    if (lexicon.tags_for(window.first(len)) != nullptr) return len;
  }
  return 0;
}

std::set<ConnectiveTag> classify_connective(std::span<const std::string> window,
                                            const ConnectiveLexicon& lexicon) {
  std::size_t len = connective_match_length(window, lexicon);
  if (len == 0) return {};
  return *lexicon.tags_for(window.first(len));
}

LexiconSet load_lexicon_set(const std::filesystem::path& dir,
                            const LexiconLoadOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw InputError("lexicon directory not found: " + dir.string());
  }
  auto load = [&](const char* file, LexiconCategory category) {
    return load_lexicon(dir / file, category);
  };

  Lexicon deictics = load("deictics_core.txt", LexiconCategory::deictic);
  if (!options.deictic_core_only && fs::exists(dir / "deictics_extended.txt")) {
    Lexicon extended = load("deictics_extended.txt", LexiconCategory::deictic);
    std::vector<std::string> merged(deictics.entries().begin(),
                                    deictics.entries().end());
    for (const std::string& e : extended.entries()) {
      if (!deictics.contains(e)) merged.push_back(e);
    }
    deictics = Lexicon("deictics", LexiconCategory::deictic, merged);
  }

  Lexicon first_person = fs::exists(dir / "first_person_pronouns.txt")
                             ? load("first_person_pronouns.txt",
                                    LexiconCategory::first_person_pronoun)
                             : default_first_person_lexicon();

  ConnectiveLexicon connectives;
  for (ConnectiveClass cls : kConnectiveClasses) {
    for (Polarity pol : kPolarities) {
      fs::path file = dir / "connectives" /
                      (std::string(to_string(cls)) + "_" +
                       std::string(to_string(pol)) + ".txt");
      if (!fs::exists(file)) continue;
      connectives.set_entries(
          cls, pol, read_list_lines(text::read_file(file), file.string()));
    }
  }

  return LexiconSet{
      .band1 = load("band1.txt", LexiconCategory::freq_band_1),
      .band2 = load("band2.txt", LexiconCategory::freq_band_2),
      .academic = load("academic.txt", LexiconCategory::academic),
      .deictics = std::move(deictics),
      .articles = article_lexicon(),
      .attributive_adjectives =
          load("attributive_adjectives.txt",
               LexiconCategory::attributive_adjective),
      .emphatic_particles =
          load("emphatic_particles.txt", LexiconCategory::emphatic_particle),
      .first_person = std::move(first_person),
      .concreteness = load_concreteness(dir / "concreteness.csv"),
      .connectives = std::move(connectives),
  };
}

std::vector<std::string> lexicon_set_warnings(const LexiconSet& set) {
  std::vector<std::string> warnings;
  std::size_t overlap = 0;
  for (const std::string& e : set.band2.entries()) {
    if (set.band1.contains(e)) ++overlap;
  }
  if (overlap > 0) {
    warnings.push_back(std::to_string(overlap) +
                       " band2 entries also appear in band1; they count toward "
                       "LR1 only");
  }
  if (set.connectives.total_entries() == 0) {
    warnings.push_back("no connective lists found; cohesion metrics will be 0");
  }
  return warnings;
}

}  // namespace orality
