//
// Copyright 2026 The gecsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Lexicon-backed morphology used by the grammatical noise operations.
// All lexicons are flat TSV files, immutable once loaded, and safe to share
// between threads.
//
//   inflection:     surface<TAB>lemma<TAB>pos<TAB>feats
//   misspellings:   correct<TAB>variant            (one variant per line)
//   oblique verbs:  lemma<TAB>standard_case<TAB>3sg_form   (`_` if none)
//   char rules:     pattern<TAB>replacement<TAB>bi|uni
//
// Blank lines and lines starting with `#` are ignored in every file.

#ifndef GECSYNTH_MORPHO_H_
#define GECSYNTH_MORPHO_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gecsynth/features.h"

namespace gecsynth {

struct Analysis {
  std::string lemma;
  std::string pos;
  FeatureSet feats;

  friend bool operator==(const Analysis&, const Analysis&) = default;
  friend auto operator<=>(const Analysis&, const Analysis&) = default;
};

class InflectionLexicon {
 public:
  InflectionLexicon() = default;

  static InflectionLexicon Load(const std::string& path);

  // Adds one (surface, analysis) pair; exact duplicates are ignored.
  void Add(std::string_view surface, const Analysis& analysis);

  // All surfaces for the key in insertion order; empty when absent. More than
  // one surface means the key is ambiguous and the caller chooses.
  const std::vector<std::string>& Inflect(std::string_view lemma,
                                          std::string_view pos,
                                          const FeatureSet& feats) const;
  const std::vector<std::string>& Inflect(const Analysis& analysis) const {
    return Inflect(analysis.lemma, analysis.pos, analysis.feats);
  }

  // Every analysis of an exact surface form; empty when unknown.
  const std::vector<Analysis>& Analyze(std::string_view surface) const;

  bool IsAttested(std::string_view surface) const;

  // Splits surface = left + right where both parts are attested and at least
  // `min_part_len` code points long, ordered by split position. A part that
  // is not attested as written is retried with its first letter lowercased.
  std::vector<std::pair<std::string, std::string>> ValidCompoundSplits(
      std::string_view surface, size_t min_part_len) const;

  size_t size() const { return entry_count_; }
  bool empty() const { return entry_count_ == 0; }

  // (surface, analysis) pairs in insertion order.
  const std::vector<std::pair<std::string, Analysis>>& entries() const {
    return entries_;
  }

 private:
  static std::string Key(std::string_view lemma, std::string_view pos,
                         const FeatureSet& feats);

  std::unordered_map<std::string, std::vector<std::string>> forward_;
  std::unordered_map<std::string, std::vector<Analysis>> reverse_;
  std::vector<std::pair<std::string, Analysis>> entries_;
  size_t entry_count_ = 0;
};

class MisspellingLexicon {
 public:
  MisspellingLexicon() = default;

  static MisspellingLexicon Load(const std::string& path);

  // Throws FormatError when the variant equals the correct form or either is
  // empty. Repeated (correct, variant) pairs are ignored.
  void Add(std::string_view correct, std::string_view variant);

  // Variants in file order; empty for unknown words.
  const std::vector<std::string>& VariantsOf(std::string_view correct) const;

  // True when `surface` is listed as a misspelled variant of some word.
  bool IsKnownMisspelling(std::string_view surface) const;

  size_t size() const { return variants_.size(); }
  bool empty() const { return variants_.empty(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> variants_;
  std::unordered_set<std::string> misspelled_;
};

// Verbs whose subject appears in an oblique case and which attract the
// nonstandard dative subject.
struct ObliqueVerb {
  std::string standard_case;                // "nom" or "acc"
  std::optional<std::string> third_singular;  // form used with a dative subject
};

class ObliqueVerbLexicon {
 public:
  static constexpr std::string_view kTargetCase = "dat";

  ObliqueVerbLexicon() = default;

  static ObliqueVerbLexicon Load(const std::string& path);

  // Throws FormatError unless standard_case is nom or acc.
  void Add(std::string_view lemma, ObliqueVerb verb);

  const ObliqueVerb* Find(std::string_view lemma) const;

  size_t size() const { return verbs_.size(); }
  bool empty() const { return verbs_.empty(); }

 private:
  std::unordered_map<std::string, ObliqueVerb> verbs_;
};

struct CharRule {
  std::string pattern;
  std::string replacement;
  bool bidirectional = false;

  friend bool operator==(const CharRule&, const CharRule&) = default;
};

class CharRuleTable {
 public:
  CharRuleTable() = default;

  // Throws FormatError for empty patterns or pattern == replacement.
  explicit CharRuleTable(std::vector<CharRule> rules);

  static CharRuleTable Load(const std::string& path);

  // y<->i, Y<->I, ý<->í, Ý<->Í and ýi->ýji.
  static CharRuleTable DefaultSpellingRules();
  // a<->á, e<->é, i<->í, o<->ó, u<->ú, y<->ý and their capitals.
  static CharRuleTable DefaultAccentPairs();

  const std::vector<CharRule>& rules() const { return rules_; }

  // Every rewrite the table allows, with bidirectional rules expanded into
  // both directions: (from, to) pairs.
  const std::vector<std::pair<std::string, std::string>>& directed() const {
    return directed_;
  }

  bool empty() const { return rules_.empty(); }

 private:
  std::vector<CharRule> rules_;
  std::vector<std::pair<std::string, std::string>> directed_;
};

}  // namespace gecsynth

#endif  // GECSYNTH_MORPHO_H_
