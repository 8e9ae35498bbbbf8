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

// Checks that a typed test pair really holds one error type and nothing else.

#ifndef GECSYNTH_VERIFY_H_
#define GECSYNTH_VERIFY_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gecsynth/edit_log.h"
#include "gecsynth/noise_op.h"
#include "gecsynth/tokenizer.h"

namespace gecsynth {

struct ByteRange {
  size_t begin = 0;
  size_t end = 0;  // exclusive; begin == end marks a deletion point

  friend bool operator==(const ByteRange&, const ByteRange&) = default;
};

// Where in the final (noised) text the log's records left their mark, with
// later records shifting and absorbing earlier ranges. Sorted and merged.
std::vector<ByteRange> TouchedRanges(const EditLog& log);

struct VerifyResult {
  bool ok = true;
  std::string detail;  // first failure
};

// Passes when the log is non-empty and holds only `op` records, replaying it
// on the target gives the source and inverting it gives the target back, and
// every span of ExtractEdits(tokens(source), tokens(target)) meets a touched
// range.
VerifyResult VerifyOpIsolation(const ParallelPair& pair, NoiseOp op,
                               const Tokenizer& tokenizer = Tokenizer());

}  // namespace gecsynth

#endif  // GECSYNTH_VERIFY_H_
