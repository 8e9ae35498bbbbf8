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

#include <sys/wait.h>

#include <cstdio>
#include <json.hpp>
#include <string>

#include "gtest/gtest.h"
#include "test_util.h"

namespace gecsynth {
namespace {

using testing::ReadFile;
using testing::TempDir;
using testing::WriteFile;

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult Cli(const std::string& args) {
  const std::string cmd = std::string("'") + GECSYNTH_CLI_PATH + "' " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Config() { return "--config '" + testing::DataPath("noise_config.json") + "' "; }

TEST(CliTest, VersionAndHelp) {
  const CliResult v = Cli("--version");
  EXPECT_EQ(v.code, 0);
  EXPECT_FALSE(v.out.empty());
  EXPECT_EQ(Cli("--help").code, 0);
  EXPECT_EQ(Cli("noise --help").code, 0);
}

TEST(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(Cli("").code, 1);
  EXPECT_EQ(Cli("frobnicate").code, 1);
  EXPECT_EQ(Cli("noise").code, 1);
  EXPECT_EQ(Cli("--strict --lenient stats x").code, 1);
  EXPECT_EQ(Cli("--config /nonexistent/config.json stats x").code, 1);
  EXPECT_EQ(Cli("score span").code, 1);
}

TEST(CliTest, NoiseThenStats) {
  TempDir dir;
  const std::string out = dir.path("pairs.tsv");
  const CliResult noise =
      Cli(Config() + "--workers 2 noise '" + testing::CorpusPath() + "' '" + out + "'");
  ASSERT_EQ(noise.code, 0);
  const auto manifest = nlohmann::json::parse(noise.out);
  EXPECT_EQ(manifest["counts"]["pairs"], 10000);
  const CliResult stats = Cli(Config() + "stats '" + out + "'");
  ASSERT_EQ(stats.code, 0);
  EXPECT_EQ(nlohmann::json::parse(stats.out)["pairs"], 10000);
  EXPECT_EQ(Cli(Config() + "--pretty stats '" + out + "'").code, 0);
}

TEST(CliTest, SeedFlagChangesOutput) {
  TempDir dir;
  WriteFile(dir.path("in.txt"), "Ég fer heim í dag, og hann líka.\nHún les bókina á morgun.\n");
  const std::string args = "noise --format plain '" + dir.path("in.txt") + "' ";
  ASSERT_EQ(Cli(Config() + "--seed 1 " + args + "'" + dir.path("a.tsv") + "'").code, 0);
  ASSERT_EQ(Cli(Config() + "--seed 1 " + args + "'" + dir.path("b.tsv") + "'").code, 0);
  ASSERT_EQ(Cli(Config() + "--seed 99 " + args + "'" + dir.path("c.tsv") + "'").code, 0);
  EXPECT_EQ(ReadFile(dir.path("a.tsv")), ReadFile(dir.path("b.tsv")));
  EXPECT_NE(ReadFile(dir.path("a.tsv")), ReadFile(dir.path("c.tsv")));
}

TEST(CliTest, ScoreCommandsPrintReports) {
  TempDir dir;
  WriteFile(dir.path("p.tsv"), "mér hlakkar til\tég hlakka til\n");
  WriteFile(dir.path("h.txt"), "ég hlakka til\n");
  const CliResult g = Cli("score gleu --pairs '" + dir.path("p.tsv") + "' --hypothesis '" +
                          dir.path("h.txt") + "'");
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(nlohmann::json::parse(g.out)["score"], 100.0);
  const CliResult s = Cli("score span --pairs '" + dir.path("p.tsv") + "'");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(nlohmann::json::parse(s.out)["f05"], 0.0);
  ASSERT_EQ(Cli("m2 convert '" + dir.path("p.tsv") + "' '" + dir.path("p.m2") + "'").code, 0);
  EXPECT_EQ(ReadFile(dir.path("p.m2")),
            "S mér hlakkar til\nA 0 2|||UNK|||ég hlakka|||REQUIRED|||-NONE-|||0\n");
}

TEST(CliTest, ConfigErrorExitsTwo) {
  TempDir dir;
  WriteFile(dir.path("bad.json"), "{\"naive_op_probability\": 1.5}");
  WriteFile(dir.path("in.txt"), "a b c\n");
  EXPECT_EQ(Cli("--config '" + dir.path("bad.json") + "' noise --format plain '" +
                dir.path("in.txt") + "' '" + dir.path("o.tsv") + "'")
                .code,
            2);
  EXPECT_EQ(Cli(Config() + "make-testsets --types typos '" + testing::CorpusPath() + "' '" +
                dir.path("sets") + "'")
                .code,
            2);
}

TEST(CliTest, MissingInputExitsThree) {
  TempDir dir;
  EXPECT_EQ(Cli("stats '" + dir.path("missing.tsv") + "'").code, 3);
  EXPECT_EQ(Cli(Config() + "noise '" + dir.path("missing.tagged") + "' '" +
                dir.path("o.tsv") + "'")
                .code,
            3);
}

TEST(CliTest, MalformedInputExitsFour) {
  TempDir dir;
  WriteFile(dir.path("bad.tagged"), "Ég\tég\n");
  EXPECT_EQ(Cli(Config() + "noise '" + dir.path("bad.tagged") + "' '" + dir.path("o.tsv") + "'")
                .code,
            4);
  WriteFile(dir.path("bad.txt"), "good\nba\xFF" "d\n");
  EXPECT_EQ(Cli("preprocess '" + dir.path("bad.txt") + "' '" + dir.path("o.txt") + "'").code, 4);
  EXPECT_EQ(Cli("--lenient preprocess '" + dir.path("bad.txt") + "' '" + dir.path("o.txt") + "'")
                .code,
            0);
}

TEST(CliTest, ExhaustionExitsFive) {
  TempDir dir;
  WriteFile(dir.path("tiny.tagged"), "Hestur\thestur\tno\tcase=nom|num=sg\n.\t.\tpunct\t_\n");
  EXPECT_EQ(Cli(Config() + "make-testsets --types dativitis '" + dir.path("tiny.tagged") +
                "' '" + dir.path("sets") + "'")
                .code,
            5);
}

TEST(CliTest, MisalignedHypothesisExitsSix) {
  TempDir dir;
  WriteFile(dir.path("p.tsv"), "a b\ta c\nd e\td e\n");
  WriteFile(dir.path("h.txt"), "a c\n");
  EXPECT_EQ(Cli("score gleu --pairs '" + dir.path("p.tsv") + "' --hypothesis '" +
                dir.path("h.txt") + "'")
                .code,
            6);
}

}  // namespace
}  // namespace gecsynth
