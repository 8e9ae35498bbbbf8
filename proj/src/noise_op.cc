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

#include "gecsynth/noise_op.h"

#include <utility>

namespace gecsynth {
namespace {

constexpr std::array<std::string_view, kNumNoiseOps> kOpNames = {
    "swap_noun_case",  "swap_mood",       "apply_dativitis",
    "split_compound",  "substitute_misspelling", "delete_space",
    "delete_commas",   "swap_word_order", "duplicate_word",
    "duplicate_char",  "drop_char",       "rule_char_swap",
    "toggle_accent",   "replace_random_char",
};

constexpr std::array<std::pair<std::string_view, NoiseOp>, 7> kTestSetOps = {{
    {"dativitis", NoiseOp::kDativitis},
    {"spaces", NoiseOp::kDeleteSpace},
    {"commas", NoiseOp::kDeleteCommas},
    {"dupl-words", NoiseOp::kDuplicateWord},
    {"mood", NoiseOp::kSwapMood},
    {"rand-noise", NoiseOp::kReplaceRandomChar},
    {"noun-case", NoiseOp::kSwapNounCase},
}};

}  // namespace

std::string_view NoiseOpName(NoiseOp op) { return kOpNames[OpIndex(op)]; }

std::optional<NoiseOp> ParseNoiseOp(std::string_view name) {
  for (NoiseOp op : kAllNoiseOps) {
    if (NoiseOpName(op) == name) return op;
  }
  return std::nullopt;
}

std::optional<NoiseOp> TestSetOp(std::string_view name) {
  for (const auto& [set_name, op] : kTestSetOps) {
    if (set_name == name) return op;
  }
  return ParseNoiseOp(name);
}

}  // namespace gecsynth
