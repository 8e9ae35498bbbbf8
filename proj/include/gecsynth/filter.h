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

// Sentence-quality filter for the clean corpus. A sentence is rejected when it
// contains an illegal character, when too few of its letters come from the
// allowed alphabet (mostly foreign text), when its token count is out of
// bounds, or when one of its words is a known misspelling. Checks run in that
// order and the first failure is reported.

#ifndef GECSYNTH_FILTER_H_
#define GECSYNTH_FILTER_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

#include "gecsynth/corpus_io.h"
#include "gecsynth/morpho.h"
#include "gecsynth/tokenizer.h"

namespace gecsynth {

enum class RejectReason { kForeignRatio, kIllegalChar, kKnownMisspelling, kLength };

inline constexpr std::array<RejectReason, 4> kAllRejectReasons = {
    RejectReason::kForeignRatio, RejectReason::kIllegalChar,
    RejectReason::kKnownMisspelling, RejectReason::kLength};

std::string_view RejectReasonName(RejectReason reason);

struct FilterRules {
  // Every permitted character. Letters outside the set count against the
  // allowed ratio; any other character outside it is illegal. Whitespace is
  // always permitted.
  std::unordered_set<char32_t> allowed_charset;
  // Minimum share of letters drawn from allowed_charset.
  double min_allowed_ratio = 0.9;
  size_t min_len = 3;   // tokens
  size_t max_len = 100;
  // Misspelling lexicon file used as the blocklist (JSON key `misspellings`).
  std::string misspellings_path;

  // Icelandic and ASCII letters, digits and common punctuation.
  static FilterRules Default();

  // JSON document with keys allowed_charset (string), min_allowed_ratio,
  // min_len, max_len and misspellings (path, relative to the file). Unknown
  // keys throw ConfigError. Missing keys keep their defaults.
  static FilterRules Load(const std::string& path);

  // Throws ConfigError unless 0 <= min_allowed_ratio <= 1 and
  // min_len <= max_len.
  void Validate() const;
};

// Share of letters in `text` that are in `allowed`; 1.0 when there are none.
double AllowedLetterRatio(std::string_view text,
                          const std::unordered_set<char32_t>& allowed);

class SentenceFilter {
 public:
  // `blocklist` may be null; it must outlive the filter.
  SentenceFilter(FilterRules rules, const MisspellingLexicon* blocklist,
                 Tokenizer tokenizer = Tokenizer());

  // nullopt keeps the sentence. Pure: the verdict depends only on the record.
  std::optional<RejectReason> Check(const SentenceRecord& record) const;

  const FilterRules& rules() const { return rules_; }

 private:
  FilterRules rules_;
  const MisspellingLexicon* blocklist_;
  Tokenizer tokenizer_;
};

std::optional<RejectReason> FilterSentence(const SentenceRecord& record,
                                           const FilterRules& rules,
                                           const MisspellingLexicon& blocklist);

}  // namespace gecsynth

#endif  // GECSYNTH_FILTER_H_
