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

#include <random>

#include "gecsynth/errors.h"
#include "gecsynth/text.h"
#include "gtest/gtest.h"

namespace gecsynth {
namespace {

TEST(DiffTextsTest, MinimalRecord) {
  const auto r = DiffTexts(NoiseOp::kDeleteSpace, 0, "á Norðurlandi", "áNorðurlandi");
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->offset, 2u);
  EXPECT_EQ(r->before, " ");
  EXPECT_EQ(r->after, "");
  EXPECT_FALSE(DiffTexts(NoiseOp::kDeleteSpace, 0, "same", "same").has_value());
}

TEST(DiffTextsTest, CutsAtCodePointBoundaries) {
  // "á" and "é" share their first byte.
  const auto r = DiffTexts(NoiseOp::kToggleAccent, 0, "vá", "vé");
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->before, "á");
  EXPECT_EQ(r->after, "é");
  EXPECT_TRUE(IsValidUtf8(r->before));
}

TEST(EditLogTest, ReplayAndInvert) {
  const std::string clean = "ein af ástæðum";
  EditLog log;
  std::string text = clean;
  for (const std::string next : {"eein af ástæðum", "eein afff ástæðum", "eein afff ástæðna"}) {
    log.push_back(*DiffTexts(NoiseOp::kDuplicateChar, 0, text, next));
    text = next;
  }
  EXPECT_EQ(ReplayForward(clean, log), text);
  EXPECT_EQ(Invert(text, log), clean);
  ParallelPair pair{"1", text, clean, log, {NoiseOp::kDuplicateChar}};
  EXPECT_EQ(Invert(pair), clean);
  EXPECT_EQ(OpsInLog(log), std::vector<NoiseOp>{NoiseOp::kDuplicateChar});
}

TEST(EditLogTest, TamperedLogIsIntegrityError) {
  EditLog log{{NoiseOp::kDropChar, 0, 1, "b", ""}};
  EXPECT_EQ(Invert("ac", log), "abc");
  log[0].after = "x";
  EXPECT_THROW(Invert("ac", log), IntegrityError);
  EditLog past_end{{NoiseOp::kDropChar, 0, 10, "b", ""}};
  EXPECT_THROW(Invert("ac", past_end), IntegrityError);
  EXPECT_THROW(ReplayForward("ac", past_end), IntegrityError);
}

TEST(EditLogTest, RandomRewriteChainsInvert) {
  std::mt19937_64 gen(3);
  const std::u32string alphabet = U"ab áé,.";
  for (int trial = 0; trial < 500; ++trial) {
    std::u32string cur;
    for (int i = 0; i < 10; ++i) cur.push_back(alphabet[gen() % alphabet.size()]);
    const std::string clean = EncodeUtf8(cur);
    EditLog log;
    for (int step = 0; step < 6; ++step) {
      std::u32string next = cur;
      const size_t pos = next.empty() ? 0 : gen() % next.size();
      switch (gen() % 3) {
        case 0:
          if (!next.empty()) next.erase(pos, 1);
          break;
        case 1:
          next.insert(pos, 1, alphabet[gen() % alphabet.size()]);
          break;
        default:
          if (!next.empty()) next[pos] = alphabet[gen() % alphabet.size()];
      }
      if (auto r = DiffTexts(NoiseOp::kReplaceRandomChar, 0, EncodeUtf8(cur), EncodeUtf8(next))) {
        log.push_back(*r);
      }
      cur = next;
    }
    const std::string noised = EncodeUtf8(cur);
    ASSERT_EQ(ReplayForward(clean, log), noised);
    ASSERT_EQ(Invert(noised, log), clean);
  }
}

}  // namespace
}  // namespace gecsynth
