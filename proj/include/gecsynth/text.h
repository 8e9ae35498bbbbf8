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

// UTF-8 helpers shared by the tokenizer, the lexicons and the noise ops.
// All offsets in this library are byte offsets into UTF-8 strings.

#ifndef GECSYNTH_TEXT_H_
#define GECSYNTH_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gecsynth {

bool IsValidUtf8(std::string_view text);

// Decodes `text` into code points. Throws FormatError on malformed input.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t c, std::string* out);

// Byte offsets of every code point start, plus text.size() as a sentinel.
std::vector<size_t> CodePointOffsets(std::string_view text);
size_t CodePointCount(std::string_view text);

// Decodes one code point starting at `*pos` and advances it.
char32_t NextCodePoint(std::string_view text, size_t* pos);

std::string NormalizeNfc(std::string_view text);

bool IsLetter(char32_t c);  // alphabetic or combining mark
bool IsDigit(char32_t c);
bool IsSpace(char32_t c);
bool IsPunctuation(char32_t c);
char32_t ToLower(char32_t c);
char32_t ToUpper(char32_t c);

// True when the first code point is an uppercase letter.
bool StartsUpper(std::string_view word);
// Upper/lowercases only the first code point.
std::string UpperFirst(std::string_view word);
std::string LowerFirst(std::string_view word);
std::string ToLowerString(std::string_view text);

// Uppercases the first letter of `word` when `model` starts uppercase.
std::string MatchCapitalization(std::string_view model, std::string_view word);

// Strips leading/trailing Unicode whitespace.
std::string_view Trim(std::string_view text);

std::vector<std::string> SplitString(std::string_view text, char sep);
std::string JoinStrings(const std::vector<std::string>& parts,
                        std::string_view sep);

}  // namespace gecsynth

#endif  // GECSYNTH_TEXT_H_
