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

#include "gecsynth/morpho.h"

#include <algorithm>

#include "gecsynth/errors.h"
#include "gecsynth/text.h"
#include "tsv.h"

namespace gecsynth {
namespace {

const std::vector<std::string> kNoSurfaces;
const std::vector<Analysis> kNoAnalyses;

}  // namespace

// --- InflectionLexicon ------------------------------------------------------

std::string InflectionLexicon::Key(std::string_view lemma, std::string_view pos,
                                   const FeatureSet& feats) {
  std::string key;
  key.reserve(lemma.size() + pos.size() + 32);
  key.append(lemma);
  key.push_back('\t');
  key.append(pos);
  key.push_back('\t');
  key.append(feats.ToString());
  return key;
}

InflectionLexicon InflectionLexicon::Load(const std::string& path) {
  InflectionLexicon lexicon;
  internal::ForEachTsvRow(
      path, 4, 4, [&](size_t, const std::vector<std::string>& f) {
        if (f[0].empty() || f[0] == "_") throw FormatError("empty surface");
        Analysis analysis{f[1] == "_" || f[1].empty() ? f[0] : f[1], f[2],
                          FeatureSet::Parse(f[3])};
        lexicon.Add(f[0], analysis);
      });
  return lexicon;
}

void InflectionLexicon::Add(std::string_view surface, const Analysis& analysis) {
  std::vector<Analysis>& analyses = reverse_[std::string(surface)];
  if (std::find(analyses.begin(), analyses.end(), analysis) != analyses.end()) {
    return;
  }
  analyses.push_back(analysis);
  forward_[Key(analysis.lemma, analysis.pos, analysis.feats)].emplace_back(
      surface);
  entries_.emplace_back(std::string(surface), analysis);
  ++entry_count_;
}

const std::vector<std::string>& InflectionLexicon::Inflect(
    std::string_view lemma, std::string_view pos, const FeatureSet& feats) const {
  auto it = forward_.find(Key(lemma, pos, feats));
  return it == forward_.end() ? kNoSurfaces : it->second;
}

const std::vector<Analysis>& InflectionLexicon::Analyze(
    std::string_view surface) const {
  auto it = reverse_.find(std::string(surface));
  return it == reverse_.end() ? kNoAnalyses : it->second;
}

bool InflectionLexicon::IsAttested(std::string_view surface) const {
  return reverse_.contains(std::string(surface));
}

std::vector<std::pair<std::string, std::string>>
InflectionLexicon::ValidCompoundSplits(std::string_view surface,
                                       size_t min_part_len) const {
  std::vector<std::pair<std::string, std::string>> splits;
  if (min_part_len == 0) min_part_len = 1;
  const std::vector<size_t> offsets = CodePointOffsets(surface);
  const size_t length = offsets.size() - 1;
  if (length < 2 * min_part_len) return splits;
  auto attested = [&](const std::string& part) {
    return IsAttested(part) || (StartsUpper(part) && IsAttested(LowerFirst(part)));
  };
  for (size_t cut = min_part_len; cut + min_part_len <= length; ++cut) {
    std::string left(surface.substr(0, offsets[cut]));
    std::string right(surface.substr(offsets[cut]));
    if (attested(left) && attested(right)) {
      splits.emplace_back(std::move(left), std::move(right));
    }
  }
  return splits;
}

// --- MisspellingLexicon -----------------------------------------------------

MisspellingLexicon MisspellingLexicon::Load(const std::string& path) {
  MisspellingLexicon lexicon;
  internal::ForEachTsvRow(path, 2, 2,
                          [&](size_t, const std::vector<std::string>& f) {
                            lexicon.Add(f[0], f[1]);
                          });
  return lexicon;
}

void MisspellingLexicon::Add(std::string_view correct, std::string_view variant) {
  if (correct.empty() || variant.empty()) {
    throw FormatError("empty misspelling entry");
  }
  if (correct == variant) {
    throw FormatError("misspelling '" + std::string(variant) +
                      "' equals its correct form");
  }
  std::vector<std::string>& list = variants_[std::string(correct)];
  if (std::find(list.begin(), list.end(), variant) != list.end()) return;
  list.emplace_back(variant);
  misspelled_.emplace(variant);
}

const std::vector<std::string>& MisspellingLexicon::VariantsOf(
    std::string_view correct) const {
  auto it = variants_.find(std::string(correct));
  return it == variants_.end() ? kNoSurfaces : it->second;
}

bool MisspellingLexicon::IsKnownMisspelling(std::string_view surface) const {
  return misspelled_.contains(std::string(surface));
}

// --- ObliqueVerbLexicon -----------------------------------------------------

ObliqueVerbLexicon ObliqueVerbLexicon::Load(const std::string& path) {
  ObliqueVerbLexicon lexicon;
  internal::ForEachTsvRow(
      path, 2, 3, [&](size_t, const std::vector<std::string>& f) {
        ObliqueVerb verb{f[1], std::nullopt};
        if (f.size() == 3 && !f[2].empty() && f[2] != "_") {
          verb.third_singular = f[2];
        }
        lexicon.Add(f[0], std::move(verb));
      });
  return lexicon;
}

void ObliqueVerbLexicon::Add(std::string_view lemma, ObliqueVerb verb) {
  if (verb.standard_case != "nom" && verb.standard_case != "acc") {
    throw FormatError("oblique verb '" + std::string(lemma) +
                      "': standard case must be nom or acc, got '" +
                      verb.standard_case + "'");
  }
  verbs_[std::string(lemma)] = std::move(verb);
}

const ObliqueVerb* ObliqueVerbLexicon::Find(std::string_view lemma) const {
  auto it = verbs_.find(std::string(lemma));
  return it == verbs_.end() ? nullptr : &it->second;
}

// --- CharRuleTable ----------------------------------------------------------

CharRuleTable::CharRuleTable(std::vector<CharRule> rules)
    : rules_(std::move(rules)) {
  for (const CharRule& rule : rules_) {
    if (rule.pattern.empty() || rule.replacement.empty()) {
      throw FormatError("char rule with empty side");
    }
    if (rule.pattern == rule.replacement) {
      throw FormatError("char rule '" + rule.pattern + "' maps to itself");
    }
    auto add = [&](const std::string& from, const std::string& to) {
      std::pair<std::string, std::string> p(from, to);
      if (std::find(directed_.begin(), directed_.end(), p) == directed_.end()) {
        directed_.push_back(std::move(p));
      }
    };
    add(rule.pattern, rule.replacement);
    if (rule.bidirectional) add(rule.replacement, rule.pattern);
  }
}

CharRuleTable CharRuleTable::Load(const std::string& path) {
  std::vector<CharRule> rules;
  internal::ForEachTsvRow(
      path, 2, 3, [&](size_t, const std::vector<std::string>& f) {
        bool bidirectional = true;
        if (f.size() == 3) {
          if (f[2] == "uni") {
            bidirectional = false;
          } else if (f[2] != "bi") {
            throw FormatError("direction must be 'bi' or 'uni', got '" + f[2] +
                              "'");
          }
        }
        rules.push_back(CharRule{f[0], f[1], bidirectional});
      });
  return CharRuleTable(std::move(rules));
}

CharRuleTable CharRuleTable::DefaultSpellingRules() {
  return CharRuleTable({
      {"y", "i", true},
      {"Y", "I", true},
      {"ý", "í", true},
      {"Ý", "Í", true},
      {"ýi", "ýji", false},
  });
}

CharRuleTable CharRuleTable::DefaultAccentPairs() {
  return CharRuleTable({
      {"a", "á", true}, {"e", "é", true}, {"i", "í", true},
      {"o", "ó", true}, {"u", "ú", true}, {"y", "ý", true},
      {"A", "Á", true}, {"E", "É", true}, {"I", "Í", true},
      {"O", "Ó", true}, {"U", "Ú", true}, {"Y", "Ý", true},
  });
}

}  // namespace gecsynth
