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

#include <algorithm>
#include <string>
#include <vector>

#include "gecsynth/corpus_io.h"
#include "gecsynth/errors.h"
#include "gecsynth/m2.h"
#include "gecsynth/pipeline.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace gecsynth {
namespace {

using testing::ReadFile;
using testing::TempDir;
using testing::WriteFile;

size_t LineCount(const std::string& path) {
  const std::string text = ReadFile(path);
  return static_cast<size_t>(std::count(text.begin(), text.end(), '\n'));
}

std::string WriteHead(const TempDir& dir, size_t n) {
  const auto& corpus = testing::FixtureCorpus();
  const std::vector<TaggedSentence> head(corpus.begin(), corpus.begin() + n);
  const std::string path = dir.path("head.tagged");
  WriteTaggedCorpus(head, path);
  return path;
}

TEST(PreprocessTest, CountsAddUpAndBlocklistRejects) {
  TempDir dir;
  WriteFile(dir.path("in.txt"),
            "Ég fer heim í dag.\n"
            "Hann er að leyta að vinnu.\n"
            "Þetta er altaf gott.\n"
            "Ég bý hjer í bænum.\n"
            "Привет мир это хороший тест.\n"
            "Já.\n"
            "Hún les bókina í dag.\n");
  PreprocessOptions o;
  o.input = dir.path("in.txt");
  o.output = dir.path("out.txt");
  o.rules_path = testing::DataPath("filter_rules.json");
  const RunManifest m = RunPreprocess(o);
  EXPECT_EQ(m.counts.at("read"), 7u);
  EXPECT_EQ(m.counts.at("kept"), 2u);
  EXPECT_EQ(m.counts.at("rejected.known_misspelling"), 3u);
  EXPECT_EQ(m.counts.at("rejected.foreign_ratio"), 1u);
  EXPECT_EQ(m.counts.at("rejected.length"), 1u);
  uint64_t rejected = 0;
  for (const auto& [key, n] : m.counts) {
    if (key.starts_with("rejected.")) rejected += n;
  }
  EXPECT_EQ(m.counts.at("kept") + rejected, m.counts.at("read"));
  EXPECT_EQ(ReadFile(o.output), "Ég fer heim í dag.\nHún les bókina í dag.\n");
  EXPECT_EQ(LineCount(o.output + ".rejected.tsv"), 5u);
  EXPECT_TRUE(std::filesystem::exists(o.output + ".manifest.json"));
}

TEST(NoiseRunTest, WorkerCountGivesByteIdenticalFiles) {
  TempDir dir;
  const std::string input = WriteHead(dir, 3000);
  NoiseOptions o;
  o.input = input;
  o.config = testing::DefaultConfig();
  o.batch_size = 700;
  o.output = dir.path("one.tsv");
  o.workers = 1;
  const RunManifest one = RunNoise(o);
  o.output = dir.path("eight.tsv");
  o.workers = 8;
  const RunManifest eight = RunNoise(o);
  EXPECT_EQ(ReadFile(dir.path("one.tsv")), ReadFile(dir.path("eight.tsv")));
  EXPECT_EQ(ReadFile(SidecarPath(dir.path("one.tsv"))),
            ReadFile(SidecarPath(dir.path("eight.tsv"))));
  EXPECT_EQ(one.op_counts, eight.op_counts);
  EXPECT_EQ(one.counts.at("pairs"), 3000u);
  EXPECT_EQ(LineCount(dir.path("one.tsv")), 3000u);
}

TEST(NoiseRunTest, PlainInputUsesTagFreeOps) {
  TempDir dir;
  WriteFile(dir.path("in.txt"), "Ég fer heim í dag, og hann líka.\nHún les bókina.\n");
  NoiseOptions o;
  o.input = dir.path("in.txt");
  o.output = dir.path("out.tsv");
  o.format = InputFormat::kPlain;
  o.config = testing::DefaultConfig();
  const RunManifest m = RunNoise(o);
  EXPECT_EQ(m.counts.at("pairs"), 2u);
  const auto pairs = ReadParallel(o.output, SidecarPath(o.output));
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[1].target, "Hún les bókina.");
  for (const ParallelPair& p : pairs) EXPECT_EQ(Invert(p), p.target);
}

TEST(NoiseRunTest, RejectsZeroWorkersAndParallelInput) {
  NoiseOptions o;
  o.workers = 0;
  EXPECT_THROW(RunNoise(o), ArgumentError);
  o.workers = 1;
  o.format = InputFormat::kParallel;
  EXPECT_THROW(RunNoise(o), ArgumentError);
}

// preprocess is not part of this chain: the fixture corpus is tagged.
std::vector<std::string> FullRun(const TempDir& dir, const std::string& input) {
  std::vector<std::string> manifests;
  NoiseOptions n;
  n.input = input;
  n.output = dir.path("pairs.tsv");
  n.config = testing::DefaultConfig();
  manifests.push_back(RunNoise(n).ToJson(false).dump());
  SplitOptions s;
  s.input = n.output;
  s.output_dir = dir.path("split");
  s.valid = 100;
  s.test = 200;
  manifests.push_back(RunSplit(s).ToJson(false).dump());
  TestsetOptions t;
  t.input = testing::CorpusPath();
  t.output_dir = dir.path("testsets");
  t.config = testing::DefaultConfig();
  t.per_type = 20;
  manifests.push_back(RunMakeTestsets(t).ToJson(false).dump());
  StatsOptions st;
  st.pairs = dir.path("split/test.tsv");
  manifests.push_back(RunStats(st).ToJson(false).dump());
  for (const char* f : {"pairs.tsv", "split/train.tsv", "split/test.tsv", "testsets/mood.m2"}) {
    manifests.push_back(ReadFile(dir.path(f)));
  }
  return manifests;
}

TEST(PipelineTest, TwoRunsGiveIdenticalManifestsAndFiles) {
  TempDir dir;
  const std::string input = WriteHead(dir, 1500);
  const auto first = FullRun(dir, input);
  const auto second = FullRun(dir, input);
  EXPECT_EQ(first, second);
}

TEST(PipelineTest, ManifestRecordsProvenance) {
  TempDir dir;
  NoiseOptions n;
  n.input = WriteHead(dir, 50);
  n.output = dir.path("pairs.tsv");
  n.config = testing::DefaultConfig();
  RunNoise(n);
  const auto j = nlohmann::json::parse(ReadFile(n.output + ".manifest.json"));
  EXPECT_EQ(j["command"], "noise");
  EXPECT_EQ(j["seed"], n.config.seed);
  EXPECT_EQ(j["config_hash"], ConfigHash(n.config));
  EXPECT_EQ(j["tool_version"], std::string(ToolVersion()));
  EXPECT_EQ(j["sentences"], 50);
  EXPECT_TRUE(j.contains("wall_seconds"));
  EXPECT_TRUE(j["ops"].contains(std::string(NoiseOpName(NoiseOp::kDativitis))));
}

TEST(ConfigHashTest, ChangesWithConfig) {
  NoiseConfig a = testing::DefaultConfig();
  NoiseConfig b = a;
  EXPECT_EQ(ConfigHash(a), ConfigHash(b));
  b.naive_op_probability = 0.7;
  EXPECT_NE(ConfigHash(a), ConfigHash(b));
  EXPECT_EQ(ConfigHash(a).size(), 16u);
}

TEST(MakeTestsetsTest, SevenTypesOfOneHundred) {
  TempDir dir;
  TestsetOptions t;
  t.input = testing::CorpusPath();
  t.output_dir = dir.path("sets");
  t.config = testing::DefaultConfig();
  const RunManifest m = RunMakeTestsets(t);
  for (std::string_view name : kDefaultTestSets) {
    const std::string base = dir.path("sets/" + std::string(name));
    EXPECT_EQ(m.counts.at("testset." + std::string(name)), 100u) << name;
    EXPECT_EQ(LineCount(base + ".tsv"), 100u) << name;
    EXPECT_EQ(ReadM2File(base + ".m2").size(), 100u) << name;
    const auto op = TestSetOp(name);
    for (const ParallelPair& p : ReadParallel(base + ".tsv", SidecarPath(base + ".tsv"))) {
      EXPECT_EQ(p.applied_ops, std::vector<NoiseOp>{*op}) << name;
    }
  }
}

TEST(MakeTestsetsTest, ExhaustedTypesAreReportedTogether) {
  TempDir dir;
  TestsetOptions t;
  t.input = WriteHead(dir, 30);
  t.output_dir = dir.path("sets");
  t.config = testing::DefaultConfig();
  t.types = {"commas", "dativitis", "spaces"};
  t.per_type = 26;
  try {
    RunMakeTestsets(t);
    FAIL() << "expected ExhaustionError";
  } catch (const ExhaustionError& e) {
    EXPECT_NE(std::string(e.what()).find("dativitis"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("commas"), std::string::npos) << e.what();
  }
  EXPECT_EQ(LineCount(dir.path("sets/spaces.tsv")), 26u);
  EXPECT_FALSE(std::filesystem::exists(dir.path("sets/commas.tsv")));
}

TEST(MakeTestsetsTest, UnknownTypeIsConfigError) {
  TempDir dir;
  TestsetOptions t;
  t.input = testing::CorpusPath();
  t.output_dir = dir.path("sets");
  t.config = testing::DefaultConfig();
  t.types = {"typos"};
  EXPECT_THROW(RunMakeTestsets(t), ConfigError);
}

class ScoreTest : public ::testing::Test {
 protected:
  void SetUp() override {
    TestsetOptions t;
    t.input = testing::CorpusPath();
    t.output_dir = dir_.path("sets");
    t.config = testing::DefaultConfig();
    t.types = {"rand-noise"};
    RunMakeTestsets(t);
    pairs_ = dir_.path("sets/rand-noise.tsv");
    std::string targets;
    for (const ParallelPair& p : ReadParallel(pairs_)) targets += p.target + "\n";
    WriteFile(dir_.path("targets.txt"), targets);
  }

  TempDir dir_;
  std::string pairs_;
};

TEST_F(ScoreTest, IdentityScoresBelowTheTargets) {
  GleuOptions g;
  g.pairs = pairs_;
  const double identity = RunScoreGleu(g).report["score_exact"].get<double>();
  g.hypothesis = dir_.path("targets.txt");
  const double oracle = RunScoreGleu(g).report["score_exact"].get<double>();
  EXPECT_LT(identity, oracle);
  EXPECT_EQ(oracle, 100.0);
}

TEST_F(ScoreTest, SpanIdentityIsZeroAndTargetsArePerfect) {
  SpanOptions s;
  s.pairs = pairs_;
  EXPECT_EQ(RunScoreSpan(s).report["f05"].get<double>(), 0.0);
  s.hypothesis = dir_.path("targets.txt");
  EXPECT_EQ(RunScoreSpan(s).report["f05"].get<double>(), 1.0);
  SpanOptions gold;
  gold.gold_m2 = dir_.path("sets/rand-noise.m2");
  gold.hypothesis = dir_.path("targets.txt");
  EXPECT_EQ(RunScoreSpan(gold).report["f05"].get<double>(), 1.0);
}

TEST_F(ScoreTest, MisalignedHypothesisIsAlignmentError) {
  WriteFile(dir_.path("short.txt"), "one line\n");
  GleuOptions g;
  g.pairs = pairs_;
  g.hypothesis = dir_.path("short.txt");
  EXPECT_THROW(RunScoreGleu(g), AlignmentError);
  SpanOptions s;
  s.pairs = pairs_;
  s.hypothesis = dir_.path("short.txt");
  EXPECT_THROW(RunScoreSpan(s), AlignmentError);
}

TEST_F(ScoreTest, MultipleReferenceFiles) {
  std::string sources;
  for (const ParallelPair& p : ReadParallel(pairs_)) sources += p.source + "\n";
  WriteFile(dir_.path("sources.txt"), sources);
  GleuOptions g;
  g.source = dir_.path("sources.txt");
  g.references = {dir_.path("targets.txt"), dir_.path("targets.txt")};
  g.hypothesis = dir_.path("targets.txt");
  EXPECT_EQ(RunScoreGleu(g).report["score_exact"].get<double>(), 100.0);
}

TEST(M2ConvertTest, PairsToM2AndBack) {
  TempDir dir;
  WriteFile(dir.path("p.tsv"), "mér hlakkar til\tég hlakka til\na b c\ta b c\n");
  M2ConvertOptions o;
  o.input = dir.path("p.tsv");
  o.output = dir.path("p.m2");
  EXPECT_EQ(RunM2Convert(o).counts.at("edits"), 1u);
  EXPECT_EQ(ReadFile(o.output),
            "S mér hlakkar til\nA 0 2|||UNK|||ég hlakka|||REQUIRED|||-NONE-|||0\n\nS a b c\n");
  M2ConvertOptions back;
  back.input = o.output;
  back.output = dir.path("back.tsv");
  RunM2Convert(back);
  EXPECT_EQ(ReadFile(back.output), ReadFile(o.input));
}

TEST(StatsTest, IdentityPairsHaveNoEdits) {
  TempDir dir;
  WriteFile(dir.path("p.tsv"), "a b\ta b\nÉg fer.\tÉg fer.\n");
  StatsOptions o;
  o.pairs = dir.path("p.tsv");
  const RunManifest m = RunStats(o);
  EXPECT_EQ(m.report["identity_pairs"], 2);
  EXPECT_EQ(m.report["mean_edit_count"].get<double>(), 0.0);
  EXPECT_EQ(m.report["edit_source"], "extracted");
  EXPECT_EQ(m.report["length_ratio"]["mean"].get<double>(), 1.0);
}

TEST(StatsTest, UsesSidecarLogsWhenPresent) {
  TempDir dir;
  NoiseOptions n;
  n.input = WriteHead(dir, 200);
  n.output = dir.path("pairs.tsv");
  n.config = testing::DefaultConfig();
  const RunManifest noise = RunNoise(n);
  StatsOptions o;
  o.pairs = n.output;
  const RunManifest m = RunStats(o);
  EXPECT_EQ(m.report["edit_source"], "log");
  uint64_t records = 0;
  for (uint64_t r : noise.op_counts->records) records += r;
  EXPECT_DOUBLE_EQ(m.report["mean_edit_count"].get<double>(), records / 200.0);
}

}  // namespace
}  // namespace gecsynth
