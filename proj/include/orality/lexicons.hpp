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
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orality {

enum class LexiconCategory {
  freq_band_1,
  freq_band_2,
  academic,
  deictic,
  attributive_adjective,
  emphatic_particle,
  first_person_pronoun,
  article,
};

std::string_view to_string(LexiconCategory category);
std::optional<LexiconCategory> parse_lexicon_category(std::string_view name);

/// A named wordlist of lowercase surface forms. Entries may span several
/// words ("of course"); internal whitespace is normalized to one space.
/// Immutable after construction.
class Lexicon {
 public:
  /// Normalizes every entry and validates the set. Throws InputError on an
  /// empty list or a duplicate after normalization.
  Lexicon(std::string name, LexiconCategory category,
          std::span<const std::string> entries);

  const std::string& name() const { return name_; }
  LexiconCategory category() const { return category_; }
  const std::set<std::string, std::less<>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(std::string_view entry) const { return entries_.contains(entry); }

  /// Longest number of words in any entry.
  std::size_t max_words() const { return max_words_; }

  /// Length in tokens of the longest entry matching tokens[pos...], or 0.
  std::size_t match_at(std::span<const std::string> tokens,
                       std::size_t pos) const;

 private:
  std::string name_;
  LexiconCategory category_;
  std::set<std::string, std::less<>> entries_;
  std::size_t max_words_ = 1;
};

/// Parses a one-entry-per-line list; "#" lines and blank lines are skipped.
Lexicon parse_lexicon(std::string_view text, std::string name,
                      LexiconCategory category);
Lexicon load_lexicon(const std::filesystem::path& path,
                     LexiconCategory category);
/// Writes entries back in the plain-text list format (sorted).
std::string dump_lexicon(const Lexicon& lexicon);

/// The closed class {a, an, the}.
Lexicon article_lexicon();
/// {i, me, mine, myself, my}
Lexicon default_first_person_lexicon();

/// Word -> concreteness rating in [100, 700]; lookups ignore case.
class ConcretenessTable {
 public:
  static constexpr double kMinValue = 100.0;
  static constexpr double kMaxValue = 700.0;

  /// Throws InputError when the value is out of range or the word repeats.
  void add(std::string_view word, double value);
  std::optional<double> lookup(std::string_view word) const;
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::map<std::string, double, std::less<>>& values() const {
    return values_;
  }

 private:
  std::map<std::string, double, std::less<>> values_;
};

/// CSV with header "word,value".
ConcretenessTable parse_concreteness(std::string_view csv);
ConcretenessTable load_concreteness(const std::filesystem::path& path);

enum class ConnectiveClass { additive = 0, causal = 1, temporal = 2, logical = 3 };
enum class Polarity { positive = 0, negative = 1 };

inline constexpr std::array<ConnectiveClass, 4> kConnectiveClasses = {
    ConnectiveClass::additive, ConnectiveClass::causal,
    ConnectiveClass::temporal, ConnectiveClass::logical};
inline constexpr std::array<Polarity, 2> kPolarities = {Polarity::positive,
                                                        Polarity::negative};

std::string_view to_string(ConnectiveClass cls);
std::string_view to_string(Polarity polarity);

struct ConnectiveTag {
  ConnectiveClass cls;
  Polarity polarity;
  auto operator<=>(const ConnectiveTag&) const = default;
};

/// Connective lists per (class, polarity). A form may sit in several lists.
class ConnectiveLexicon {
 public:
  static constexpr std::size_t kMaxEntriesPerList = 20;

  /// Replaces the (cls, polarity) list. Throws InputError for more than 20
  /// entries, a duplicate, or an entry that is empty after normalization.
  void set_entries(ConnectiveClass cls, Polarity polarity,
                   std::span<const std::string> entries);
  const std::vector<std::string>& entries(ConnectiveClass cls,
                                          Polarity polarity) const;

  /// Tags of the entry spelled exactly by words, or nullptr.
  const std::set<ConnectiveTag>* tags_for(std::span<const std::string> words) const;

  std::size_t max_words() const { return max_words_; }
  std::size_t total_entries() const;

 private:
  std::array<std::array<std::vector<std::string>, 2>, 4> lists_;
  std::map<std::string, std::set<ConnectiveTag>, std::less<>> index_;
  std::size_t max_words_ = 1;

  void rebuild_index();
};

/// All (class, polarity) pairs of the longest entry that matches a prefix
/// of window. Empty when no entry matches.
std::set<ConnectiveTag> classify_connective(std::span<const std::string> window,
                                            const ConnectiveLexicon& lexicon);

/// Number of words consumed by the connective matched at window head.
std::size_t connective_match_length(std::span<const std::string> window,
                                    const ConnectiveLexicon& lexicon);

/// Every list the metrics need, loaded from one directory:
///
///   band1.txt band2.txt academic.txt
///   deictics_core.txt [deictics_extended.txt]
///   attributive_adjectives.txt emphatic_particles.txt
///   [first_person_pronouns.txt]
///   concreteness.csv
///   connectives/<class>_<polarity>.txt   (any subset of the eight lists)
struct LexiconSet {
  Lexicon band1;
  Lexicon band2;
  Lexicon academic;
  Lexicon deictics;
  Lexicon articles;
  Lexicon attributive_adjectives;
  Lexicon emphatic_particles;
  Lexicon first_person;
  ConcretenessTable concreteness;
  ConnectiveLexicon connectives;
};

struct LexiconLoadOptions {
  // Person/space/time deictics only; skips deictics_extended.txt.
  bool deictic_core_only = false;
};

LexiconSet load_lexicon_set(const std::filesystem::path& dir,
                            const LexiconLoadOptions& options = {});

/// Non-fatal findings for `lexicons check`, e.g. overlapping bands.
std::vector<std::string> lexicon_set_warnings(const LexiconSet& set);

}  // namespace orality
