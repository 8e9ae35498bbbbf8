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

#include <random>
#include <string>
#include <vector>

#include "gecsynth/errors.h"
#include "gecsynth/span.h"
#include "gtest/gtest.h"
#include "oracles/alignment_oracle.h"

namespace gecsynth {
namespace {

TokenList RandomTokens(std::mt19937_64& rng, size_t max_len) {
  static const char* kAlphabet[] = {"a", "b", "c", "A", "B"};
  TokenList out(rng() % (max_len + 1));
  for (std::string& t : out) t = kAlphabet[rng() % 5];
  return out;
}

oracle::Move ToMove(AlignOp op) {
  switch (op) {
    case AlignOp::kMatch: return oracle::Move::kM;
    case AlignOp::kSubstitute: return oracle::Move::kS;
    case AlignOp::kInsert: return oracle::Move::kI;
    case AlignOp::kDelete: return oracle::Move::kD;
    case AlignOp::kTranspose: return oracle::Move::kT;
  }
  return oracle::Move::kM;
}

TEST(SubstitutionCostTest, CaseOnlyIsCheaper) {
  EXPECT_EQ(SubstitutionCost("hús", "hús"), 0);
  EXPECT_EQ(SubstitutionCost("Hús", "hús"), 1);
  EXPECT_EQ(SubstitutionCost("ÁS", "ás"), 1);
  EXPECT_EQ(SubstitutionCost("hús", "hest"), 2);
}

TEST(AlignTokensTest, Transposition) {
  const Alignment a = AlignTokens({"a", "b", "c"}, {"b", "a", "c"});
  EXPECT_EQ(a.cost, 2);
  EXPECT_EQ(a.ops, (std::vector<AlignOp>{AlignOp::kTranspose, AlignOp::kMatch}));
}

TEST(ExtractEditsTest, Examples) {
  EXPECT_TRUE(ExtractEdits({"a", "b"}, {"a", "b"}).empty());
  EXPECT_EQ(ExtractEdits({"a", "b"}, {"a", "a", "b"}),
            (std::vector<EditSpan>{{1, 1, {"a"}}}));
  EXPECT_EQ(ExtractEdits({"a", "x", "b"}, {"a", "b"}),
            (std::vector<EditSpan>{{1, 2, {}}}));
  EXPECT_EQ(ExtractEdits({"mér", "hlakkar", "til"}, {"ég", "hlakka", "til"}),
            (std::vector<EditSpan>{{0, 2, {"ég", "hlakka"}}}));
  EXPECT_EQ(ExtractEdits({}, {"a"}), (std::vector<EditSpan>{{0, 0, {"a"}}}));
}

TEST(ExtractEditsOracleTest, MatchesExhaustiveAlignment) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const TokenList src = RandomTokens(rng, 6);
    const TokenList tgt = RandomTokens(rng, 6);
    const oracle::AlignmentOracle expected(src, tgt);
    const Alignment a = AlignTokens(src, tgt);
    ASSERT_EQ(a.cost, expected.cost()) << i;
    std::vector<oracle::Move> moves;
    for (AlignOp op : a.ops) moves.push_back(ToMove(op));
    ASSERT_EQ(moves, expected.moves()) << i;
    const auto spans = ExtractEdits(src, tgt);
    const auto oracle_spans = expected.Spans();
    ASSERT_EQ(spans.size(), oracle_spans.size()) << i;
    for (size_t k = 0; k < spans.size(); ++k) {
      EXPECT_EQ(spans[k].start, oracle_spans[k].start);
      EXPECT_EQ(spans[k].end, oracle_spans[k].end);
      EXPECT_EQ(spans[k].replacement, oracle_spans[k].replacement);
    }
    EXPECT_EQ(ApplyEdits(src, spans), tgt) << i;
  }
}

TEST(ApplyEditsTest, RejectsOverlapAndOutOfRange) {
  EXPECT_THROW(ApplyEdits({"a", "b"}, {{0, 2, {}}, {1, 2, {"x"}}}), ArgumentError);
  EXPECT_THROW(ApplyEdits({"a"}, {{1, 2, {}}}), ArgumentError);
  EXPECT_THROW(NormalizeSpans({{1, 1, {"x"}}, {1, 1, {"y"}}}), ArgumentError);
  EXPECT_EQ(ApplyEdits({"a", "b"}, {{2, 2, {"c"}}, {0, 1, {"x", "y"}}}),
            (TokenList{"x", "y", "b", "c"}));
}

TEST(ScoreSpansTest, WorkedExample) {
  // One gold edit; the hypothesis proposes it plus one wrong edit.
  const std::vector<EditSpan> gold = {{1, 2, {"hlakkar"}}};
  const std::vector<EditSpan> hyp = {{1, 2, {"hlakkar"}}, {3, 3, {"til"}}};
  const SpanScore s = ScoreSpans(gold, hyp);
  EXPECT_EQ(s.tp, 1u);
  EXPECT_EQ(s.fp, 1u);
  EXPECT_EQ(s.fn, 0u);
  EXPECT_NEAR(s.precision, 0.5, 1e-9);
  EXPECT_NEAR(s.recall, 1.0, 1e-9);
  EXPECT_NEAR(s.f05, 5.0 / 9.0, 1e-9);
}

TEST(ScoreSpansTest, IdentityHypothesisScoresZero) {
  const SpanScore s = ScoreSpans({{0, 1, {"x"}}}, {});
  EXPECT_EQ(s.f05, 0.0);
  EXPECT_EQ(s.fn, 1u);
}

TEST(ScoreSpansTest, PerfectHypothesisScoresOne) {
  const std::vector<EditSpan> gold = {{0, 1, {"x"}}, {2, 2, {"y", "z"}}};
  EXPECT_EQ(ScoreSpans(gold, gold).f05, 1.0);
}

TEST(ScoreSpansTest, ReplacementMustMatchToo) {
  const SpanScore s = ScoreSpans({{0, 1, {"x"}}}, {{0, 1, {"y"}}});
  EXPECT_EQ(s.tp, 0u);
  EXPECT_EQ(s.fp, 1u);
  EXPECT_EQ(s.fn, 1u);
}

TEST(ScoreSpansTest, NothingToDoAndNothingDoneIsPerfect) {
  EXPECT_EQ(ScoreSpans({}, {}).f05, 1.0);
}

TEST(ScoreCorpusSpansTest, SumsCountsBeforeRatios) {
  const std::vector<SpanEntry> entries = {
      {{"a", "b"}, {{1, 2, {"c"}}}, {"a", "c"}},
      {{"x", "y"}, {{0, 1, {"z"}}}, {"x", "y"}},
      {{"p"}, {}, {"q"}}};
  const SpanScore s = ScoreCorpusSpans(entries);
  EXPECT_EQ(s.tp, 1u);
  EXPECT_EQ(s.fp, 1u);
  EXPECT_EQ(s.fn, 1u);
  EXPECT_DOUBLE_EQ(s.f05, 0.5);
}

}  // namespace
}  // namespace gecsynth
