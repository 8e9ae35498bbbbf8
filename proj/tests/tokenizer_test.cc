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

#include "gecsynth/tokenizer.h"

#include <random>
#include <string>

#include "gecsynth/errors.h"
#include "gecsynth/text.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace gecsynth {
namespace {

using Surfaces = std::vector<std::string>;

TEST(TokenizerTest, SplitsTrailingPunctuation) {
  const Tokenizer tok;
  EXPECT_EQ(tok.Surfaces("Ég er hér."), (Surfaces{"Ég", "er", "hér", "."}));
}

TEST(TokenizerTest, NumberAndPeriodSeparate) {
  const Tokenizer tok;
  const TokenizedText t = tok.Tokenize("mynd 1.");
  ASSERT_EQ(t.tokens.size(), 3u);
  EXPECT_EQ(t.tokens[1].surface, "1");
  EXPECT_EQ(t.tokens[1].kind, TokenKind::kNumber);
  EXPECT_EQ(t.tokens[2].kind, TokenKind::kPunct);
}

TEST(TokenizerTest, MergedWordsStayOneToken) {
  const Tokenizer tok;
  EXPECT_EQ(tok.Surfaces("áNorðurlandi"), (Surfaces{"áNorðurlandi"}));
}

TEST(TokenizerTest, DecimalsAndThousandsStayWhole) {
  const Tokenizer tok;
  EXPECT_EQ(tok.Surfaces("3,5 og 1.000 kr"), (Surfaces{"3,5", "og", "1.000", "kr"}));
}

TEST(TokenizerTest, MixedLettersAndDigitsAreWords) {
  const Tokenizer tok;
  const TokenizedText t = tok.Tokenize("a4f 4eita");
  ASSERT_EQ(t.tokens.size(), 2u);
  EXPECT_EQ(t.tokens[0].kind, TokenKind::kWord);
  EXPECT_EQ(t.tokens[1].kind, TokenKind::kWord);
}

TEST(TokenizerTest, AbbreviationsFromFile) {
  const Tokenizer tok = Tokenizer::FromAbbreviationFile(testing::DataPath("abbreviations.txt"));
  EXPECT_EQ(tok.Surfaces("Ég sá t.d. hest."), (Surfaces{"Ég", "sá", "t.d.", "hest", "."}));
  EXPECT_EQ(Tokenizer().Surfaces("t.d."), (Surfaces{"t", ".", "d", "."}));
  EXPECT_THROW(Tokenizer::FromAbbreviationFile("/nonexistent/abbr.txt"), IoError);
}

TEST(TokenizerTest, OffsetsMatchSurfacesAndGapsAreWhitespace) {
  const Tokenizer tok;
  const std::string text = "  Hann  sagði: „já“ 🙂\t";
  const TokenizedText t = tok.Tokenize(text);
  ASSERT_EQ(t.gaps.size(), t.tokens.size() + 1);
  EXPECT_EQ(t.gaps.front(), "  ");
  EXPECT_EQ(t.gaps.back(), "\t");
  for (size_t i = 0; i < t.tokens.size(); ++i) {
    const Token& k = t.tokens[i];
    EXPECT_LT(k.start, k.end);
    EXPECT_EQ(text.substr(k.start, k.end - k.start), k.surface);
    if (i + 1 < t.tokens.size()) {
      EXPECT_EQ(text.substr(k.end, t.tokens[i + 1].start - k.end), t.gaps[i + 1]);
    }
  }
  EXPECT_EQ(Detokenize(t), text);
}

TEST(TokenizerTest, ZeroWidthGapConcatenates) {
  EXPECT_EQ(Detokenize(Surfaces{"á", "Norðurlandi"}, {"", "", ""}), "áNorðurlandi");
  EXPECT_THROW(Detokenize(Surfaces{"a"}, {""}), ArgumentError);
}

TEST(TokenizerTest, ClassifiesSurfaces) {
  EXPECT_EQ(ClassifySurface("hús"), TokenKind::kWord);
  EXPECT_EQ(ClassifySurface("2020"), TokenKind::kNumber);
  EXPECT_EQ(ClassifySurface("…"), TokenKind::kPunct);
  EXPECT_EQ(ClassifySurface("🙂"), TokenKind::kSymbol);
  EXPECT_EQ(ClassifySurface("https://mbl.is/frett"), TokenKind::kSymbol);
}

TEST(TokenizerTest, UrlsAndEmojiAreSymbolRuns) {
  const TokenizedText t = Tokenizer().Tokenize("Sjá https://mbl.is/a?b=1. og www.ruv.is) 🙂🙂!");
  EXPECT_EQ(t.Surfaces(), (Surfaces{"Sjá", "https://mbl.is/a?b=1", ".", "og", "www.ruv.is",
                                    ")", "🙂🙂", "!"}));
  EXPECT_EQ(t.tokens[1].kind, TokenKind::kSymbol);
  EXPECT_EQ(t.tokens[4].kind, TokenKind::kSymbol);
  EXPECT_EQ(t.tokens[6].kind, TokenKind::kSymbol);
  EXPECT_EQ(Tokenizer().Surfaces("http:// x"), (Surfaces{"http", ":", "/", "/", "x"}));
}

TEST(TokenizerTest, RandomStringsRoundTrip) {
  const std::u32string alphabet = U"aábðeéíóúýþæöAÁÐÞ019 .,;:!?()-„“\t🙂$";
  const Tokenizer tok({"t.d.", "o.s.frv."});
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 3000; ++trial) {
    std::u32string s;
    const size_t len = gen() % 30;
    for (size_t i = 0; i < len; ++i) s.push_back(alphabet[gen() % alphabet.size()]);
    const std::string text = EncodeUtf8(s);
    const TokenizedText t = tok.Tokenize(text);
    ASSERT_EQ(Detokenize(t), text);
    // Re-tokenizing the rebuilt text gives the same surfaces.
    ASSERT_EQ(tok.Surfaces(Detokenize(t)), t.Surfaces());
    for (const std::string& g : t.gaps) {
      for (char32_t c : DecodeUtf8(g)) ASSERT_TRUE(IsSpace(c));
    }
  }
}

TEST(TokenizerTest, FixtureSentencesRoundTrip) {
  const Tokenizer tok;
  const auto& corpus = testing::FixtureCorpus();
  for (size_t i = 0; i < 1000; ++i) {
    ASSERT_TRUE(corpus[i].raw_text.has_value());
    const std::string& text = *corpus[i].raw_text;
    ASSERT_EQ(Detokenize(tok.Tokenize(text)), text);
    Surfaces expected;
    for (const TaggedToken& t : corpus[i].tokens) expected.push_back(t.surface);
    ASSERT_EQ(tok.Surfaces(text), expected) << text;
  }
}

}  // namespace
}  // namespace gecsynth
