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

// Compound-split oracle: tries every cut point of the word and keeps those
// where both halves are in a plain set of attested surfaces.

#ifndef GECSYNTH_TESTS_ORACLES_COMPOUND_ORACLE_H_
#define GECSYNTH_TESTS_ORACLES_COMPOUND_ORACLE_H_

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gecsynth/text.h"

namespace gecsynth::oracle {

inline bool Attested(const std::set<std::string>& words, const std::string& w) {
  return words.count(w) > 0 || words.count(LowerFirst(w)) > 0;
}

inline std::vector<std::pair<std::string, std::string>> AllSplits(
    const std::set<std::string>& words, const std::string& surface,
    size_t min_part) {
  const std::u32string cps = DecodeUtf8(surface);
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t k = 1; k < cps.size(); ++k) {
    if (k < min_part || cps.size() - k < min_part) continue;
    const std::string left = EncodeUtf8(cps.substr(0, k));
    const std::string right = EncodeUtf8(cps.substr(k));
    if (Attested(words, left) && Attested(words, right)) out.emplace_back(left, right);
  }
  return out;
}

}  // namespace gecsynth::oracle

#endif  // GECSYNTH_TESTS_ORACLES_COMPOUND_ORACLE_H_
