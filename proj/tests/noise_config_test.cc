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

#include "gecsynth/noise_config.h"

#include "gecsynth/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace gecsynth {
namespace {

TEST(NoiseConfigTest, Defaults) {
  const NoiseConfig c;
  EXPECT_DOUBLE_EQ(c.naive_op_probability, 0.8);
  EXPECT_EQ(c.rule_based_policy, RuleBasedPolicy::kWhereverPossible);
  EXPECT_EQ(c.mood_direction, MoodDirection::kIndicativeToSubjunctive);
  EXPECT_EQ(c.min_compound_part, 3u);
  for (NoiseOp op : kAllNoiseOps) {
    EXPECT_TRUE(c.op(op).enabled);
    EXPECT_EQ(c.op(op).intensity, 1);
    EXPECT_DOUBLE_EQ(c.ApplicationProbability(op), IsRuleBased(op) ? 1.0 : 0.8);
  }
}

TEST(NoiseConfigTest, ParsesEveryKey) {
  const NoiseConfig c = NoiseConfig::FromJson(R"({
    "seed": 7,
    "naive_op_probability": 0.5,
    "rule_based_policy": {"probabilistic": 0.25},
    "ops": {
      "toggle_accent": {"enabled": false, "intensity": 2},
      "drop_char": {"probability": 0.1},
      "delete_commas": {"comma_probability": 0.5},
      "swap_mood": {"direction": "subj_to_ind"},
      "swap_noun_case": {"np_wide": true},
      "split_compound": {"min_part_len": 2},
      "replace_random_char": {"alphabet": "ab"}
    },
    "lexicons": {"inflection": "lex/infl.tsv"},
    "tagset": {"noun": ["NN"]}
  })", "/base");
  EXPECT_EQ(c.seed, 7u);
  EXPECT_DOUBLE_EQ(c.ApplicationProbability(NoiseOp::kSwapWordOrder), 0.5);
  EXPECT_DOUBLE_EQ(c.ApplicationProbability(NoiseOp::kSwapMood), 0.25);
  EXPECT_DOUBLE_EQ(c.ApplicationProbability(NoiseOp::kToggleAccent), 0.0);
  EXPECT_DOUBLE_EQ(c.ApplicationProbability(NoiseOp::kDropChar), 0.1);
  EXPECT_EQ(c.op(NoiseOp::kToggleAccent).intensity, 2);
  EXPECT_DOUBLE_EQ(c.comma_probability, 0.5);
  EXPECT_EQ(c.mood_direction, MoodDirection::kSubjunctiveToIndicative);
  EXPECT_TRUE(c.np_wide_case);
  EXPECT_EQ(c.min_compound_part, 2u);
  EXPECT_EQ(c.replacement_alphabet, "ab");
  EXPECT_EQ(c.lexicons.inflection, "/base/lex/infl.tsv");
  EXPECT_EQ(c.tagset.noun, std::vector<std::string>{"NN"});
}

TEST(NoiseConfigTest, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(NoiseConfig::FromJson(R"({"sed": 1})"), ConfigError);
  EXPECT_THROW(NoiseConfig::FromJson(R"({"ops": {"frobnicate": {}}})"), ConfigError);
  EXPECT_THROW(NoiseConfig::FromJson(R"({"ops": {"drop_char": {"np_wide": true}}})"),
               ConfigError);
  EXPECT_THROW(NoiseConfig::FromJson(R"({"naive_op_probability": 1.2})"), ConfigError);
  EXPECT_THROW(NoiseConfig::FromJson(R"({"ops": {"drop_char": {"intensity": 0}}})"),
               ConfigError);
  EXPECT_THROW(NoiseConfig::FromJson(R"({"ops": {"drop_char": {"intensity": 9}}})"),
               ConfigError);
  EXPECT_THROW(NoiseConfig::FromJson(R"({"rule_based_policy": "sometimes"})"), ConfigError);
  EXPECT_THROW(NoiseConfig::FromJson(R"({"ops": {"swap_mood": {"direction": "up"}}})"),
               ConfigError);
  EXPECT_THROW(NoiseConfig::FromJson("{not json"), ConfigError);
  EXPECT_THROW(NoiseConfig::FromJson(R"({"seed": "seven"})"), ConfigError);
  EXPECT_THROW(NoiseConfig::Load("/nonexistent/config.json"), IoError);
}

TEST(NoiseConfigTest, CanonicalJsonRoundTrips) {
  NoiseConfig c = testing::DefaultConfig();
  c.seed = 99;
  c.op(NoiseOp::kDropChar).probability = 0.3;
  c.rule_based_policy = RuleBasedPolicy::kProbabilistic;
  c.rule_based_probability = 0.6;
  const NoiseConfig back = NoiseConfig::FromJson(c.ToJson());
  EXPECT_EQ(back, c);
  EXPECT_EQ(back.ToJson(), c.ToJson());
}

TEST(NoiseConfigTest, ShippedConfigResolvesLexicons) {
  const NoiseConfig c = testing::DefaultConfig();
  ASSERT_TRUE(c.lexicons.inflection.has_value());
  EXPECT_NE(c.lexicons.inflection->find("data/fixtures/inflection.tsv"), std::string::npos);
  EXPECT_TRUE(c.lexicons.abbreviations.has_value());
}

}  // namespace
}  // namespace gecsynth
