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

// Gap-preserving tokenizer. Every token records its byte span in the input
// and the whitespace between tokens is kept, so Detokenize(Tokenize(t)) == t
// for any input.
//
// Rules, applied at each token start:
//   0. a URL (http://, https:// or www. up to the next whitespace, without
//      trailing punctuation and closing brackets) is one symbol token;
//   1. a configured abbreviation (longest match, followed by a non-alphanumeric
//      character or the end of text) is one word token;
//   2. a maximal run of letters and digits is one token: a word if it holds a
//      letter, otherwise a number. Digit runs continue across a single `.` or
//      `,` that is followed by another digit (3,5 and 1.000 stay whole);
//   3. each punctuation character is its own token;
//   4. a maximal run of anything else that is not whitespace is a symbol
//      token (emoji, math signs).

#ifndef GECSYNTH_TOKENIZER_H_
#define GECSYNTH_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gecsynth {

enum class TokenKind { kWord, kNumber, kPunct, kSymbol };

std::string_view TokenKindName(TokenKind kind);

struct Token {
  std::string surface;
  size_t start = 0;  // byte offset into the original text
  size_t end = 0;    // exclusive
  TokenKind kind = TokenKind::kWord;

  friend bool operator==(const Token&, const Token&) = default;
};

// tokens[i] sits between gaps[i] and gaps[i + 1]; gaps.size() is always
// tokens.size() + 1 and every gap is whitespace only.
struct TokenizedText {
  std::vector<Token> tokens;
  std::vector<std::string> gaps;

  std::vector<std::string> Surfaces() const;
};

class Tokenizer {
 public:
  Tokenizer() = default;
  explicit Tokenizer(std::vector<std::string> abbreviations);

  // One abbreviation per line; blank lines and `#` comments are skipped.
  static Tokenizer FromAbbreviationFile(const std::string& path);

  TokenizedText Tokenize(std::string_view text) const;
  std::vector<std::string> Surfaces(std::string_view text) const;

  const std::vector<std::string>& abbreviations() const {
    return abbreviations_;
  }

 private:
  size_t MatchAbbreviation(std::string_view rest) const;

  std::vector<std::string> abbreviations_;  // longest first
};

// Throws ArgumentError unless gaps.size() == tokens.size() + 1.
std::string Detokenize(const std::vector<Token>& tokens,
                       const std::vector<std::string>& gaps);
std::string Detokenize(const std::vector<std::string>& surfaces,
                       const std::vector<std::string>& gaps);
std::string Detokenize(const TokenizedText& tokenized);

// Kind of a standalone surface string, using the same character classes as
// the tokenizer: word if it contains a letter, number if it is digits (with
// separators), punct if every character is punctuation, symbol otherwise.
TokenKind ClassifySurface(std::string_view surface);

}  // namespace gecsynth

#endif  // GECSYNTH_TOKENIZER_H_
