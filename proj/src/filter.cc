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

#include "gecsynth/filter.h"

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "gecsynth/errors.h"
#include "gecsynth/text.h"

namespace gecsynth {
namespace {

constexpr std::string_view kDefaultCharset =
    "aábcdðeéfghiíjklmnoópqrstuúvwxyýzþæö"
    "AÁBCDÐEÉFGHIÍJKLMNOÓPQRSTUÚVWXYÝZÞÆÖ"
    "0123456789"
    ".,;:!?-–—()[]\"'„“”‘’«»/%&+*=§°…";

std::unordered_set<char32_t> CharSet(std::string_view chars) {
  std::unordered_set<char32_t> set;
  for (char32_t c : DecodeUtf8(chars)) set.insert(c);
  return set;
}

}  // namespace

std::string_view RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kForeignRatio:
      return "foreign_ratio";
    case RejectReason::kIllegalChar:
      return "illegal_char";
    case RejectReason::kKnownMisspelling:
      return "known_misspelling";
    case RejectReason::kLength:
      return "length";
  }
  return "length";
}

FilterRules FilterRules::Default() {
  FilterRules rules;
  rules.allowed_charset = CharSet(kDefaultCharset);
  return rules;
}

FilterRules FilterRules::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rules file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(path + ": expected a JSON object");
  FilterRules rules = Default();
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "allowed_charset") {
        rules.allowed_charset = CharSet(value.get<std::string>());
      } else if (key == "min_allowed_ratio") {
        rules.min_allowed_ratio = value.get<double>();
      } else if (key == "min_len") {
        rules.min_len = value.get<size_t>();
      } else if (key == "max_len") {
        rules.max_len = value.get<size_t>();
      } else if (key == "misspellings") {
        std::filesystem::path p = value.get<std::string>();
        if (p.is_relative()) p = std::filesystem::path(path).parent_path() / p;
        rules.misspellings_path = p.string();
      } else {
        throw ConfigError(path + ": unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  } catch (const FormatError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  rules.Validate();
  return rules;
}

void FilterRules::Validate() const {
  if (!(min_allowed_ratio >= 0.0 && min_allowed_ratio <= 1.0)) {
    throw ConfigError("min_allowed_ratio must lie in [0, 1]");
  }
  if (min_len > max_len) throw ConfigError("min_len exceeds max_len");
}

double AllowedLetterRatio(std::string_view text,
                          const std::unordered_set<char32_t>& allowed) {
  size_t letters = 0;
  size_t in_set = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    const char32_t c = NextCodePoint(text, &pos);
    if (!IsLetter(c)) continue;
    ++letters;
    if (allowed.contains(c)) ++in_set;
  }
  return letters == 0 ? 1.0 : static_cast<double>(in_set) / letters;
}

SentenceFilter::SentenceFilter(FilterRules rules,
                               const MisspellingLexicon* blocklist,
                               Tokenizer tokenizer)
    : rules_(std::move(rules)),
      blocklist_(blocklist),
      tokenizer_(std::move(tokenizer)) {
  rules_.Validate();
}

std::optional<RejectReason> SentenceFilter::Check(
    const SentenceRecord& record) const {
  const std::string_view text = record.text;
  size_t pos = 0;
  while (pos < text.size()) {
    const char32_t c = NextCodePoint(text, &pos);
    if (IsLetter(c) || IsSpace(c)) continue;
    if (!rules_.allowed_charset.contains(c)) return RejectReason::kIllegalChar;
  }
  if (AllowedLetterRatio(text, rules_.allowed_charset) <
      rules_.min_allowed_ratio) {
    return RejectReason::kForeignRatio;
  }
  const TokenizedText tokens = tokenizer_.Tokenize(text);
  if (tokens.tokens.size() < rules_.min_len ||
      tokens.tokens.size() > rules_.max_len) {
    return RejectReason::kLength;
  }
  if (blocklist_ != nullptr) {
    for (const Token& t : tokens.tokens) {
      if (t.kind != TokenKind::kWord) continue;
      if (blocklist_->IsKnownMisspelling(t.surface) ||
          (StartsUpper(t.surface) &&
           blocklist_->IsKnownMisspelling(LowerFirst(t.surface)))) {
        return RejectReason::kKnownMisspelling;
      }
    }
  }
  return std::nullopt;
}

std::optional<RejectReason> FilterSentence(const SentenceRecord& record,
                                           const FilterRules& rules,
                                           const MisspellingLexicon& blocklist) {
  return SentenceFilter(rules, &blocklist).Check(record);
}

}  // namespace gecsynth
