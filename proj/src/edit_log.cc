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

#include "gecsynth/edit_log.h"

#include <algorithm>

#include "gecsynth/errors.h"

namespace gecsynth {
namespace {

bool IsContinuation(char c) {
  return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

std::string Describe(const EditRecord& r) {
  return std::string(NoiseOpName(r.op)) + " record at offset " +
         std::to_string(r.offset);
}

}  // namespace

std::optional<EditRecord> DiffTexts(NoiseOp op, size_t token,
                                    std::string_view from,
                                    std::string_view to) {
  if (from == to) return std::nullopt;
  const size_t limit = std::min(from.size(), to.size());
  size_t prefix = 0;
  while (prefix < limit && from[prefix] == to[prefix]) ++prefix;
  while (prefix > 0 &&
         ((prefix < from.size() && IsContinuation(from[prefix])) ||
          (prefix < to.size() && IsContinuation(to[prefix])))) {
    --prefix;
  }
  size_t suffix = 0;
  while (suffix < limit - prefix &&
         from[from.size() - 1 - suffix] == to[to.size() - 1 - suffix]) {
    ++suffix;
  }
  while (suffix > 0 && IsContinuation(from[from.size() - suffix])) --suffix;
  EditRecord record;
  record.op = op;
  record.token = token;
  record.offset = prefix;
  record.before = std::string(from.substr(prefix, from.size() - prefix - suffix));
  record.after = std::string(to.substr(prefix, to.size() - prefix - suffix));
  return record;
}

std::string ReplayForward(std::string_view clean, const EditLog& log) {
  std::string text(clean);
  for (const EditRecord& r : log) {
    if (r.offset > text.size() ||
        text.compare(r.offset, r.before.size(), r.before) != 0) {
      throw IntegrityError("edit log does not match text: " + Describe(r));
    }
    text.replace(r.offset, r.before.size(), r.after);
  }
  return text;
}

std::string Invert(std::string_view noised, const EditLog& log) {
  std::string text(noised);
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    const EditRecord& r = *it;
    if (r.offset > text.size() ||
        text.compare(r.offset, r.after.size(), r.after) != 0) {
      throw IntegrityError("edit log does not match text: " + Describe(r));
    }
    text.replace(r.offset, r.after.size(), r.before);
  }
  return text;
}

std::string Invert(const ParallelPair& pair) {
  return Invert(pair.source, pair.edits);
}

std::vector<NoiseOp> OpsInLog(const EditLog& log) {
  std::vector<NoiseOp> ops;
  for (const EditRecord& r : log) {
    if (std::find(ops.begin(), ops.end(), r.op) == ops.end()) {
      ops.push_back(r.op);
    }
  }
  return ops;
}

}  // namespace gecsynth
