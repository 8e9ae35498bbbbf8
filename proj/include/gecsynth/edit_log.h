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

// An edit log is the ordered list of text rewrites that turned a clean
// sentence into its noised version. Record k says: in the text produced by
// records 0..k-1, the bytes [offset, offset + before.size()) equal `before`
// and were replaced by `after`. Replaying records left to right on the clean
// text gives the noised text; undoing them right to left gives it back.

#ifndef GECSYNTH_EDIT_LOG_H_
#define GECSYNTH_EDIT_LOG_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gecsynth/noise_op.h"

namespace gecsynth {

struct EditRecord {
  NoiseOp op = NoiseOp::kSwapNounCase;
  size_t token = 0;   // index of the affected token when it was edited
  size_t offset = 0;  // byte offset into the text at that point
  std::string before;
  std::string after;

  friend bool operator==(const EditRecord&, const EditRecord&) = default;
};

using EditLog = std::vector<EditRecord>;

// One synthetic training pair: `source` is the noised text, `target` the
// clean original.
struct ParallelPair {
  std::string id;
  std::string source;
  std::string target;
  EditLog edits;
  std::vector<NoiseOp> applied_ops;  // distinct ops in `edits`, first-use order

  friend bool operator==(const ParallelPair&, const ParallelPair&) = default;
};

// The minimal record turning `from` into `to`, cut at code point boundaries;
// nullopt when the texts are equal.
std::optional<EditRecord> DiffTexts(NoiseOp op, size_t token,
                                    std::string_view from, std::string_view to);

// Applies the records in order. Throws IntegrityError if a record's `before`
// is not found at its offset.
std::string ReplayForward(std::string_view clean, const EditLog& log);

// Undoes the records right to left. Throws IntegrityError on mismatch.
std::string Invert(std::string_view noised, const EditLog& log);
std::string Invert(const ParallelPair& pair);

std::vector<NoiseOp> OpsInLog(const EditLog& log);

}  // namespace gecsynth

#endif  // GECSYNTH_EDIT_LOG_H_
