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

#include "gecsynth/corpus_io.h"

#include <string>

#include "gecsynth/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace gecsynth {
namespace {

using testing::ReadFile;
using testing::TempDir;
using testing::WriteFile;

TEST(PlainCorpusTest, ReadsLinesInOrder) {
  TempDir dir;
  WriteFile(dir.path("a.txt"), "a\nb\n");
  const auto records = ReadPlainCorpus(dir.path("a.txt"));
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].text, "a");
  EXPECT_EQ(records[0].id, "1");
  EXPECT_EQ(records[1].text, "b");
}

TEST(PlainCorpusTest, EmptyFileIsEmptyStream) {
  TempDir dir;
  WriteFile(dir.path("e.txt"), "");
  EXPECT_TRUE(ReadPlainCorpus(dir.path("e.txt")).empty());
}

TEST(PlainCorpusTest, NormalizesAndDropsCarriageReturn) {
  TempDir dir;
  WriteFile(dir.path("n.txt"), "e\xCC\x81g\r\n\nhér\n");
  const auto records = ReadPlainCorpus(dir.path("n.txt"));
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].text, "ég");
  EXPECT_EQ(records[1].id, "3");
}

TEST(PlainCorpusTest, LenientSkipsInvalidUtf8AndCounts) {
  TempDir dir;
  WriteFile(dir.path("bad.txt"), "good\nba\xFF" "d\nalso good\n\xC3\n");
  size_t skipped = 0;
  const auto records =
      ReadPlainCorpus(dir.path("bad.txt"), DecodePolicy::kLenient, &skipped);
  EXPECT_EQ(records.size(), 2u);
  EXPECT_EQ(skipped, 2u);
}

TEST(PlainCorpusTest, StrictNamesTheLine) {
  TempDir dir;
  WriteFile(dir.path("bad.txt"), "good\nba\xFF" "d\n");
  try {
    ReadPlainCorpus(dir.path("bad.txt"));
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos) << e.what();
  }
}

TEST(PlainCorpusTest, MissingFileIsIoError) {
  EXPECT_THROW(ReadPlainCorpus("/nonexistent/corpus.txt"), IoError);
}

TEST(TaggedCorpusTest, ReadsTwoTokenSentence) {
  TempDir dir;
  WriteFile(dir.path("t.tagged"),
            "Ég\tég\tfn\tcase=nom|num=sg\nhlakka\thlakka\tso\tmood=ind|person=1\n");
  const auto sentences = ReadTaggedCorpus(dir.path("t.tagged"));
  ASSERT_EQ(sentences.size(), 1u);
  const TaggedSentence& s = sentences[0];
  EXPECT_EQ(s.id, "1");
  ASSERT_EQ(s.tokens.size(), 2u);
  EXPECT_EQ(s.tokens[0].surface, "Ég");
  EXPECT_EQ(s.tokens[0].lemma, "ég");
  EXPECT_EQ(s.tokens[0].pos, "fn");
  EXPECT_TRUE(s.tokens[0].feats.Has("case", "nom"));
  EXPECT_TRUE(s.tokens[1].feats.Has("person", "1"));
}

TEST(TaggedCorpusTest, DefaultsForMissingLemmaAndFeats) {
  TempDir dir;
  WriteFile(dir.path("t.tagged"), "# id = x7\n# text = Hús .\nHús\t_\tno\t_\n.\t_\tpun\t_\n");
  const auto sentences = ReadTaggedCorpus(dir.path("t.tagged"));
  ASSERT_EQ(sentences.size(), 1u);
  EXPECT_EQ(sentences[0].id, "x7");
  EXPECT_EQ(sentences[0].raw_text, "Hús .");
  EXPECT_EQ(sentences[0].tokens[0].lemma, "Hús");
  EXPECT_TRUE(sentences[0].tokens[0].feats.empty());
}

TEST(TaggedCorpusTest, BlankOnlyFileIsEmpty) {
  TempDir dir;
  WriteFile(dir.path("b.tagged"), "\n\n\n");
  EXPECT_TRUE(ReadTaggedCorpus(dir.path("b.tagged")).empty());
}

TEST(TaggedCorpusTest, WrongColumnCountNamesLine) {
  TempDir dir;
  WriteFile(dir.path("w.tagged"), "Ég\tég\tfn\t_\nhlakka\thlakka\n");
  try {
    ReadTaggedCorpus(dir.path("w.tagged"));
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos) << e.what();
  }
}

TEST(TaggedCorpusTest, CommentOnlyBlockIsError) {
  TempDir dir;
  WriteFile(dir.path("c.tagged"), "# id = a\n\n");
  EXPECT_THROW(ReadTaggedCorpus(dir.path("c.tagged")), FormatError);
}

TEST(TaggedCorpusTest, WriteThenReadIsIdentity) {
  TempDir dir;
  const auto& corpus = testing::FixtureCorpus();
  const std::vector<TaggedSentence> head(corpus.begin(), corpus.begin() + 200);
  WriteTaggedCorpus(head, dir.path("o.tagged"));
  EXPECT_EQ(ReadTaggedCorpus(dir.path("o.tagged")), head);
  // The fixture file is already in canonical form.
  const std::string original = ReadFile(testing::CorpusPath());
  const std::string rewritten = ReadFile(dir.path("o.tagged"));
  EXPECT_EQ(original.substr(0, rewritten.size()), rewritten);
}

TEST(ParallelTest, OnePairOneLine) {
  TempDir dir;
  ParallelPair p;
  p.source = "a b";
  p.target = "a";
  EXPECT_EQ(WriteParallel({p}, dir.path("p.tsv")), 1u);
  EXPECT_EQ(ReadFile(dir.path("p.tsv")), "a b\ta\n");
}

TEST(ParallelTest, EscapesRoundTrip) {
  TempDir dir;
  ParallelPair p;
  p.id = "1";
  p.source = "tab\there\\n not newline\nreal newline\r";
  p.target = "\\";
  WriteParallel({p}, dir.path("p.tsv"));
  EXPECT_EQ(ReadFile(dir.path("p.tsv")),
            "tab\\there\\\\n not newline\\nreal newline\\r\t\\\\\n");
  const auto back = ReadParallel(dir.path("p.tsv"));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].source, p.source);
  EXPECT_EQ(back[0].target, p.target);
  EXPECT_THROW(UnescapeField("bad\\"), FormatError);
  EXPECT_THROW(UnescapeField("bad\\q"), FormatError);
}

TEST(ParallelTest, EmptyStreamEmptyFile) {
  TempDir dir;
  EXPECT_EQ(WriteParallel({}, dir.path("p.tsv")), 0u);
  EXPECT_EQ(ReadFile(dir.path("p.tsv")), "");
  EXPECT_TRUE(ReadParallel(dir.path("p.tsv")).empty());
}

TEST(ParallelTest, SidecarRoundTrip) {
  TempDir dir;
  ParallelPair p;
  p.id = "s1";
  p.target = "á Norðurlandi";
  p.source = "áNorðurlandi";
  p.edits.push_back({NoiseOp::kDeleteSpace, 0, 2, " ", ""});
  p.applied_ops = {NoiseOp::kDeleteSpace};
  ParallelPair q;
  q.id = "s2";
  q.source = q.target = "x";
  const std::string path = dir.path("p.tsv");
  WriteParallel({p, q}, path, SidecarPath(path));
  const auto back = ReadParallel(path, SidecarPath(path));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0], p);
  EXPECT_EQ(back[1], q);
}

TEST(ParallelTest, SidecarLengthMismatchIsAlignmentError) {
  TempDir dir;
  const std::string path = dir.path("p.tsv");
  WriteFile(path, "a\tb\nc\td\n");
  WriteFile(SidecarPath(path), SidecarLine(ParallelPair{}) + "\n");
  EXPECT_THROW(ReadParallel(path, SidecarPath(path)), AlignmentError);
}

TEST(ParallelTest, MissingTabIsFormatError) {
  TempDir dir;
  WriteFile(dir.path("p.tsv"), "no tab here\n");
  EXPECT_THROW(ReadParallel(dir.path("p.tsv")), FormatError);
}

TEST(ReadLinesTest, KeepsBlankLines) {
  TempDir dir;
  WriteFile(dir.path("h.txt"), "a\n\nb\n");
  EXPECT_EQ(ReadLines(dir.path("h.txt")), (std::vector<std::string>{"a", "", "b"}));
}

}  // namespace
}  // namespace gecsynth
