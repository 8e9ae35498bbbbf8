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

#ifndef GECSYNTH_NOISE_OP_H_
#define GECSYNTH_NOISE_OP_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace gecsynth {

// The fourteen corruption operations. The first five are rule-based: they
// need PoS tags or lexicon lookups and are attempted wherever a site exists.
// The other nine are the naive ops, applied with a fixed probability.
enum class NoiseOp {
  kSwapNounCase,
  kSwapMood,
  kDativitis,
  kSplitCompound,
  kMisspelling,
  kDeleteSpace,
  kDeleteCommas,
  kSwapWordOrder,
  kDuplicateWord,
  kDuplicateChar,
  kDropChar,
  kRuleCharSwap,
  kToggleAccent,
  kReplaceRandomChar,
};

inline constexpr size_t kNumNoiseOps = 14;

// Catalogue order, which is also the index order used in per-op counters.
inline constexpr std::array<NoiseOp, kNumNoiseOps> kAllNoiseOps = {
    NoiseOp::kSwapNounCase,   NoiseOp::kSwapMood,
    NoiseOp::kDativitis,      NoiseOp::kSplitCompound,
    NoiseOp::kMisspelling,    NoiseOp::kDeleteSpace,
    NoiseOp::kDeleteCommas,   NoiseOp::kSwapWordOrder,
    NoiseOp::kDuplicateWord,  NoiseOp::kDuplicateChar,
    NoiseOp::kDropChar,       NoiseOp::kRuleCharSwap,
    NoiseOp::kToggleAccent,   NoiseOp::kReplaceRandomChar,
};

// Order in which compose applies the ops: grammatical, then lexical,
// then word-level, then character-level, each seeing the previous output.
inline constexpr std::array<NoiseOp, kNumNoiseOps> kApplicationOrder = {
    NoiseOp::kDativitis,      NoiseOp::kSwapNounCase,
    NoiseOp::kSwapMood,       NoiseOp::kMisspelling,
    NoiseOp::kSplitCompound,  NoiseOp::kDeleteCommas,
    NoiseOp::kDuplicateWord,  NoiseOp::kSwapWordOrder,
    NoiseOp::kDeleteSpace,    NoiseOp::kDuplicateChar,
    NoiseOp::kDropChar,       NoiseOp::kRuleCharSwap,
    NoiseOp::kToggleAccent,   NoiseOp::kReplaceRandomChar,
};

inline constexpr size_t OpIndex(NoiseOp op) { return static_cast<size_t>(op); }

inline constexpr bool IsRuleBased(NoiseOp op) {
  return OpIndex(op) <= OpIndex(NoiseOp::kMisspelling);
}

std::string_view NoiseOpName(NoiseOp op);
std::optional<NoiseOp> ParseNoiseOp(std::string_view name);

// The seven typed evaluation sets and the op each one exercises.
inline constexpr std::array<std::string_view, 7> kDefaultTestSets = {
    "dativitis", "spaces", "commas", "dupl-words",
    "mood",      "rand-noise", "noun-case",
};

// Accepts a test-set name from kDefaultTestSets or any op name.
std::optional<NoiseOp> TestSetOp(std::string_view name);

}  // namespace gecsynth

#endif  // GECSYNTH_NOISE_OP_H_
