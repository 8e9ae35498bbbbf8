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

#include "gecsynth/tokenizer.h"

#include <unicode/uchar.h>

#include <algorithm>
#include <fstream>

#include "gecsynth/errors.h"
#include "gecsynth/text.h"

namespace gecsynth {
namespace {

bool IsAlnum(char32_t c) { return IsLetter(c) || IsDigit(c); }

bool IsMarkOrJoiner(char32_t c) {
  const int8_t type = u_charType(static_cast<UChar32>(c));
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK ||
         type == U_ENCLOSING_MARK || c == U'\u200D';
}

// Peeks at the code point starting at `pos` without advancing.
char32_t PeekAt(std::string_view text, size_t pos) {
  return NextCodePoint(text, &pos);
}

bool StartsWithNoCase(std::string_view text, std::string_view prefix) {
  if (text.size() < prefix.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    const char c = text[i] >= 'A' && text[i] <= 'Z' ? static_cast<char>(text[i] + 32) : text[i];
    if (c != prefix[i]) return false;
  }
  return true;
}

// Length of a URL at the start of `rest`, or 0. A URL runs to the next
// whitespace, minus trailing sentence punctuation and closing brackets.
size_t MatchUrl(std::string_view rest) {
  size_t prefix = 0;
  for (std::string_view p : {"https://", "http://", "www."}) {
    if (StartsWithNoCase(rest, p)) {
      prefix = p.size();
      break;
    }
  }
  if (prefix == 0) return 0;
  size_t end = prefix;
  while (end < rest.size()) {
    size_t after = end;
    if (IsSpace(NextCodePoint(rest, &after))) break;
    end = after;
  }
  while (end > prefix && std::string_view(".,;:!?)]}\"'").find(rest[end - 1]) !=
                             std::string_view::npos) {
    --end;
  }
  return end > prefix ? end : 0;
}

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord:
      return "word";
    case TokenKind::kNumber:
      return "number";
    case TokenKind::kPunct:
      return "punct";
    case TokenKind::kSymbol:
      return "symbol";
  }
  return "word";
}

std::vector<std::string> TokenizedText::Surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

Tokenizer::Tokenizer(std::vector<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {
  std::erase_if(abbreviations_, [](const std::string& a) { return a.empty(); });
  std::stable_sort(abbreviations_.begin(), abbreviations_.end(),
                   [](const std::string& a, const std::string& b) {
                     return a.size() > b.size();
                   });
}

Tokenizer Tokenizer::FromAbbreviationFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open abbreviation list '" + path + "'");
  std::vector<std::string> abbreviations;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    if (!IsValidUtf8(trimmed)) {
      throw FormatError(path + ": invalid UTF-8 in abbreviation list");
    }
    abbreviations.push_back(NormalizeNfc(trimmed));
  }
  return Tokenizer(std::move(abbreviations));
}

size_t Tokenizer::MatchAbbreviation(std::string_view rest) const {
  for (const std::string& abbr : abbreviations_) {
    if (!rest.starts_with(abbr)) continue;
    if (abbr.size() == rest.size() || !IsAlnum(PeekAt(rest, abbr.size()))) {
      return abbr.size();
    }
  }
  return 0;
}

TokenizedText Tokenizer::Tokenize(std::string_view text) const {
  TokenizedText out;
  size_t pos = 0;
  size_t gap_start = 0;
  while (true) {
    while (pos < text.size()) {
      size_t next = pos;
      if (!IsSpace(NextCodePoint(text, &next))) break;
      pos = next;
    }
    out.gaps.emplace_back(text.substr(gap_start, pos - gap_start));
    if (pos >= text.size()) break;

    const size_t start = pos;
    TokenKind kind;
    size_t next = pos;
    const char32_t first = NextCodePoint(text, &next);
    if (const size_t len = MatchUrl(text.substr(pos)); len > 0) {
      kind = TokenKind::kSymbol;
      pos += len;
    } else if (const size_t len = MatchAbbreviation(text.substr(pos)); len > 0) {
      kind = TokenKind::kWord;
      pos += len;
    } else if (IsAlnum(first)) {
      bool has_letter = IsLetter(first);
      pos = next;
      while (pos < text.size()) {
        size_t after = pos;
        const char32_t c = NextCodePoint(text, &after);
        if (IsAlnum(c)) {
          has_letter = has_letter || IsLetter(c);
          pos = after;
          continue;
        }
        if (!has_letter && (c == U'.' || c == U',') && after < text.size() &&
            IsDigit(PeekAt(text, after))) {
          pos = after;
          continue;
        }
        break;
      }
      kind = has_letter ? TokenKind::kWord : TokenKind::kNumber;
    } else if (IsPunctuation(first)) {
      kind = TokenKind::kPunct;
      pos = next;
    } else {
      kind = TokenKind::kSymbol;
      pos = next;
      while (pos < text.size()) {
        size_t after = pos;
        const char32_t c = NextCodePoint(text, &after);
        if (IsSpace(c) || IsPunctuation(c)) break;
        if (IsAlnum(c) && !IsMarkOrJoiner(c)) break;
        pos = after;
      }
    }
    out.tokens.push_back(
        Token{std::string(text.substr(start, pos - start)), start, pos, kind});
    gap_start = pos;
  }
  return out;
}

std::vector<std::string> Tokenizer::Surfaces(std::string_view text) const {
  return Tokenize(text).Surfaces();
}

std::string Detokenize(const std::vector<std::string>& surfaces,
                       const std::vector<std::string>& gaps) {
  if (gaps.size() != surfaces.size() + 1) {
    throw ArgumentError("detokenize: " + std::to_string(surfaces.size()) +
                        " tokens need " + std::to_string(surfaces.size() + 1) +
                        " gaps, got " + std::to_string(gaps.size()));
  }
  std::string out = gaps[0];
  for (size_t i = 0; i < surfaces.size(); ++i) {
    out.append(surfaces[i]);
    out.append(gaps[i + 1]);
  }
  return out;
}

std::string Detokenize(const std::vector<Token>& tokens,
                       const std::vector<std::string>& gaps) {
  if (gaps.size() != tokens.size() + 1) {
    throw ArgumentError("detokenize: " + std::to_string(tokens.size()) +
                        " tokens need " + std::to_string(tokens.size() + 1) +
                        " gaps, got " + std::to_string(gaps.size()));
  }
  std::string out = gaps[0];
  for (size_t i = 0; i < tokens.size(); ++i) {
    out.append(tokens[i].surface);
    out.append(gaps[i + 1]);
  }
  return out;
}

std::string Detokenize(const TokenizedText& tokenized) {
  return Detokenize(tokenized.tokens, tokenized.gaps);
}

TokenKind ClassifySurface(std::string_view surface) {
  if (!surface.empty() && MatchUrl(surface) == surface.size()) return TokenKind::kSymbol;
  bool has_digit = false;
  bool all_punct = !surface.empty();
  bool numeric = !surface.empty();
  size_t pos = 0;
  while (pos < surface.size()) {
    const char32_t c = NextCodePoint(surface, &pos);
    if (IsLetter(c)) return TokenKind::kWord;
    if (IsDigit(c)) has_digit = true;
    if (!IsPunctuation(c)) all_punct = false;
    if (!IsDigit(c) && c != U'.' && c != U',') numeric = false;
  }
  if (has_digit && numeric) return TokenKind::kNumber;
  if (all_punct) return TokenKind::kPunct;
  return TokenKind::kSymbol;
}

}  // namespace gecsynth
