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

// M2 blocks:
//
//   S tok tok tok
//   A 1 2|||UNK|||x|||REQUIRED|||-NONE-|||0
//
// Entries are separated by a blank line. The type field is written as UNK
// and ignored on read; a deletion has an empty replacement field.

#ifndef GECSYNTH_M2_H_
#define GECSYNTH_M2_H_

#include <string>
#include <string_view>
#include <vector>

#include "gecsynth/span.h"

namespace gecsynth {

struct M2Entry {
  TokenList source;
  std::vector<EditSpan> edits;

  friend bool operator==(const M2Entry&, const M2Entry&) = default;
};

// One block, newline-terminated, without the separating blank line. Throws
// ArgumentError for empty tokens, tokens holding whitespace or `|||`, and
// invalid spans.
std::string ToM2(const M2Entry& entry, int annotator = 0);

// Blocks joined by blank lines.
std::string ToM2(const std::vector<M2Entry>& entries, int annotator = 0);

// Parses every block. A-lines of other annotators and `noop` lines are
// skipped. Throws FormatError (with the line number) for malformed lines and
// spans outside the source.
std::vector<M2Entry> FromM2(std::string_view text, int annotator = 0);

std::vector<M2Entry> ReadM2File(const std::string& path, int annotator = 0);
void WriteM2File(const std::vector<M2Entry>& entries, const std::string& path,
                 int annotator = 0);

}  // namespace gecsynth

#endif  // GECSYNTH_M2_H_
