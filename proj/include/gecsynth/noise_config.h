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

// Noise configuration and its JSON form. Example:
//
//   {
//     "seed": 7,
//     "naive_op_probability": 0.8,
//     "rule_based_policy": "wherever_possible",      // or {"probabilistic": p}
//     "ops": {
//       "toggle_accent": {"enabled": true, "intensity": 2},
//       "delete_commas": {"comma_probability": 1.0},
//       "swap_mood": {"direction": "ind_to_subj"},     // or "subj_to_ind"
//       "swap_noun_case": {"np_wide": false},
//       "split_compound": {"min_part_len": 3},
//       "replace_random_char": {"alphabet": "abc123"}
//     },
//     "lexicons": {"inflection": "...", "misspellings": "...",
//                  "oblique_verbs": "...", "char_rules": "...",
//                  "accents": "...", "abbreviations": "..."},
//     "tagset": {"noun": [...], "nominal": [...], "verb": [...],
//                "modifier": [...]}
//   }
//
// Every op accepts `enabled`, `intensity` and `probability`; the op-specific
// keys above are accepted only on their op. Unknown keys are rejected.
// Relative lexicon paths are resolved against the config file's directory.

#ifndef GECSYNTH_NOISE_CONFIG_H_
#define GECSYNTH_NOISE_CONFIG_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gecsynth/noise_op.h"

namespace gecsynth {

struct OpSettings {
  bool enabled = true;
  // Atomic edits per application: tokens for word-level and grammatical ops,
  // characters inside the one chosen word for character-level ops.
  int intensity = 1;
  // Overrides naive_op_probability (naive ops) or the rule-based policy.
  std::optional<double> probability;

  friend bool operator==(const OpSettings&, const OpSettings&) = default;
};

enum class RuleBasedPolicy { kWhereverPossible, kProbabilistic };
enum class MoodDirection { kIndicativeToSubjunctive, kSubjunctiveToIndicative };

// PoS tags that the grammatical ops look for. Tags not listed are ignored.
struct Tagset {
  std::vector<std::string> noun = {"noun", "no", "n", "propn"};
  std::vector<std::string> nominal = {"noun", "no", "n", "propn",
                                      "pron", "fn", "pfn"};
  std::vector<std::string> verb = {"verb", "so", "v"};
  std::vector<std::string> modifier = {"adj", "lo", "det", "gr", "art"};

  friend bool operator==(const Tagset&, const Tagset&) = default;
};

struct LexiconPaths {
  std::optional<std::string> inflection;
  std::optional<std::string> misspellings;
  std::optional<std::string> oblique_verbs;
  std::optional<std::string> char_rules;
  std::optional<std::string> accents;
  std::optional<std::string> abbreviations;

  friend bool operator==(const LexiconPaths&, const LexiconPaths&) = default;
};

inline constexpr int kMaxIntensity = 8;

struct NoiseConfig {
  uint64_t seed = 0;
  double naive_op_probability = 0.8;
  RuleBasedPolicy rule_based_policy = RuleBasedPolicy::kWhereverPossible;
  double rule_based_probability = 1.0;  // used by kProbabilistic
  std::array<OpSettings, kNumNoiseOps> ops{};

  double comma_probability = 1.0;
  MoodDirection mood_direction = MoodDirection::kIndicativeToSubjunctive;
  bool np_wide_case = false;
  size_t min_compound_part = 3;
  std::string replacement_alphabet =
      "aábdðeéfghiíjklmnoóprstuúvxyýþæö0123456789";

  Tagset tagset;
  LexiconPaths lexicons;

  // Parses a JSON document. Throws ConfigError on syntax errors, unknown keys
  // and out-of-range values.
  static NoiseConfig FromJson(std::string_view json_text,
                              const std::string& base_dir = "");
  static NoiseConfig Load(const std::string& path);

  // Canonical JSON form (all keys, fixed order); Load(ToJson()) round-trips.
  std::string ToJson() const;

  void Validate() const;

  OpSettings& op(NoiseOp o) { return ops[OpIndex(o)]; }
  const OpSettings& op(NoiseOp o) const { return ops[OpIndex(o)]; }

  // Chance that compose attempts `o` on a sentence.
  double ApplicationProbability(NoiseOp o) const;

  friend bool operator==(const NoiseConfig&, const NoiseConfig&) = default;
};

}  // namespace gecsynth

#endif  // GECSYNTH_NOISE_CONFIG_H_
