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

// gecsynth command-line tool.
//
// Exit codes:
//   0 success        4 malformed input
//   1 usage          5 too few applicable sentences
//   2 bad config     6 misaligned inputs
//   3 I/O failure    7 edit log integrity failure
//                    8 internal error

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gecsynth/errors.h"
#include "gecsynth/noise_config.h"
#include "gecsynth/noise_op.h"
#include "gecsynth/pipeline.h"
#include "gecsynth/text.h"

namespace {

using gecsynth::NoiseConfig;
using nlohmann::ordered_json;

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kConfig = 2,
  kIo = 3,
  kFormat = 4,
  kExhaustion = 5,
  kAlignment = 6,
  kIntegrity = 7,
  kInternal = 8,
};

struct GlobalFlags {
  std::string config_path;
  std::optional<uint64_t> seed;
  size_t workers = 1;
  bool strict = false;
  bool lenient = false;
  bool pretty = false;
};

void Flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>* rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      Flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (size_t i = 0; i < j.size(); ++i) {
      Flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    }
  } else {
    rows->emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void Print(const ordered_json& j, bool pretty) {
  if (!pretty) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  Flatten(j, "", &rows);
  size_t width = 0;
  for (const auto& r : rows) width = std::max(width, gecsynth::CodePointCount(r.first));
  for (const auto& [k, v] : rows) {
    std::cout << k << std::string(width - gecsynth::CodePointCount(k) + 2, ' ') << v << '\n';
  }
}

NoiseConfig LoadConfig(const GlobalFlags& g) {
  NoiseConfig config = g.config_path.empty() ? NoiseConfig() : NoiseConfig::Load(g.config_path);
  if (g.seed) config.seed = *g.seed;
  return config;
}

gecsynth::Tokenizer ConfigTokenizer(const NoiseConfig& config) {
  if (config.lexicons.abbreviations) {
    return gecsynth::Tokenizer::FromAbbreviationFile(*config.lexicons.abbreviations);
  }
  return gecsynth::Tokenizer();
}

gecsynth::InputFormat ParseFormat(const std::string& name) {
  if (name == "tagged") return gecsynth::InputFormat::kTagged;
  if (name == "plain") return gecsynth::InputFormat::kPlain;
  if (name == "parallel") return gecsynth::InputFormat::kParallel;
  throw gecsynth::ArgumentError("unknown format '" + name + "'");
}

int Fail(int code, const std::string& kind, const std::string& what) {
  std::cerr << "gecsynth: " << kind << ": " << what << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic error generation and GEC scoring"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(gecsynth::ToolVersion()));

  GlobalFlags g;
  app.add_option("--config", g.config_path, "Noise config JSON file")->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "Seed, overrides the config");
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
  auto* strict = app.add_flag("--strict", g.strict, "Fail on undecodable input lines (default)");
  app.add_flag("--lenient", g.lenient, "Skip undecodable input lines")->excludes(strict);
  app.add_flag("--pretty", g.pretty, "Print reports as tables");

  // preprocess
  gecsynth::PreprocessOptions pre;
  std::string rules_path;
  auto* cmd_pre = app.add_subcommand("preprocess", "Filter a plain corpus");
  cmd_pre->add_option("input", pre.input, "Plain corpus")->required();
  cmd_pre->add_option("output", pre.output, "Kept sentences")->required();
  cmd_pre->add_option("--rules", rules_path, "Filter rules JSON");

  // noise
  gecsynth::NoiseOptions noise;
  std::string noise_format = "tagged";
  auto* cmd_noise = app.add_subcommand("noise", "Generate parallel pairs");
  cmd_noise->add_option("input", noise.input, "Tagged (or plain) corpus")->required();
  cmd_noise->add_option("output", noise.output, "Pairs file")->required();
  cmd_noise->add_option("--format", noise_format, "tagged or plain");
  cmd_noise->add_option("--batch-size", noise.batch_size, "Sentences per batch");

  // split
  gecsynth::SplitOptions split;
  std::string split_format = "parallel";
  auto* cmd_split = app.add_subcommand("split", "Hold out validation and test data");
  cmd_split->add_option("input", split.input, "Input corpus")->required();
  cmd_split->add_option("output_dir", split.output_dir, "Output directory")->required();
  cmd_split->add_option("--valid", split.valid, "Validation items");
  cmd_split->add_option("--test", split.test, "Test items");
  cmd_split->add_option("--format", split_format, "parallel, tagged or plain");

  // make-testsets
  gecsynth::TestsetOptions ts;
  auto* cmd_ts = app.add_subcommand("make-testsets", "Generate typed test sets");
  cmd_ts->add_option("input", ts.input, "Tagged corpus")->required();
  cmd_ts->add_option("output_dir", ts.output_dir, "Output directory")->required();
  cmd_ts->add_option("-n,--per-type", ts.per_type, "Pairs per type");
  cmd_ts->add_option("--types", ts.types, "Test set types or op names")->delimiter(',');

  // score
  auto* cmd_score = app.add_subcommand("score", "Score hypotheses");
  cmd_score->require_subcommand(1);
  gecsynth::GleuOptions gleu;
  std::string gleu_pairs, gleu_source, gleu_mode = "micro";
  auto* cmd_gleu = cmd_score->add_subcommand("gleu", "GLEU");
  cmd_gleu->add_option("--pairs", gleu_pairs, "Pairs file (source, reference)");
  cmd_gleu->add_option("--source", gleu_source, "Source lines");
  cmd_gleu->add_option("--reference", gleu.references, "Reference lines (repeatable)");
  cmd_gleu->add_option("--hypothesis", gleu.hypothesis, "Hypothesis lines or 'identity'");
  cmd_gleu->add_option("--mode", gleu_mode, "micro or macro")
      ->check(CLI::IsMember({"micro", "macro"}));
  cmd_gleu->add_option("--max-n", gleu.max_n, "Highest n-gram order")->check(CLI::PositiveNumber);
  cmd_gleu->add_option("--iterations", gleu.iterations, "Samples for several references");

  gecsynth::SpanOptions span;
  std::string span_pairs, span_gold;
  auto* cmd_span = cmd_score->add_subcommand("span", "Span-based F0.5");
  cmd_span->add_option("--pairs", span_pairs, "Pairs file; gold edits are extracted");
  cmd_span->add_option("--gold", span_gold, "Gold M2 file");
  cmd_span->add_option("--hypothesis", span.hypothesis, "Hypothesis lines or 'identity'");
  cmd_span->add_option("--annotator", span.annotator, "M2 annotator id");

  // m2 convert
  gecsynth::M2ConvertOptions m2;
  auto* cmd_m2 = app.add_subcommand("m2", "M2 tools");
  cmd_m2->require_subcommand(1);
  auto* cmd_m2c = cmd_m2->add_subcommand("convert", "Pairs to M2, or M2 to pairs");
  cmd_m2c->add_option("input", m2.input, "Pairs file or .m2 file")->required();
  cmd_m2c->add_option("output", m2.output, ".m2 file or pairs file")->required();
  cmd_m2c->add_option("--annotator", m2.annotator, "Annotator id");

  // stats
  gecsynth::StatsOptions stats;
  auto* cmd_stats = app.add_subcommand("stats", "Summarize a pairs file");
  cmd_stats->add_option("pairs", stats.pairs, "Pairs file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const NoiseConfig config = LoadConfig(g);
    gecsynth::RunManifest manifest;
    if (*cmd_pre) {
      if (!rules_path.empty()) pre.rules_path = rules_path;
      pre.misspellings_path = config.lexicons.misspellings;
      pre.abbreviations_path = config.lexicons.abbreviations;
      pre.policy = g.lenient ? gecsynth::DecodePolicy::kLenient : gecsynth::DecodePolicy::kStrict;
      manifest = gecsynth::RunPreprocess(pre);
    } else if (*cmd_noise) {
      noise.config = config;
      noise.workers = g.workers;
      noise.format = ParseFormat(noise_format);
      manifest = gecsynth::RunNoise(noise);
    } else if (*cmd_split) {
      split.seed = config.seed;
      split.format = ParseFormat(split_format);
      manifest = gecsynth::RunSplit(split);
    } else if (*cmd_ts) {
      ts.config = config;
      manifest = gecsynth::RunMakeTestsets(ts);
    } else if (*cmd_gleu) {
      if (!gleu_pairs.empty()) gleu.pairs = gleu_pairs;
      if (!gleu_source.empty()) gleu.source = gleu_source;
      gleu.averaging = gleu_mode == "macro" ? gecsynth::GleuAveraging::kMacro
                                            : gecsynth::GleuAveraging::kMicro;
      gleu.seed = config.seed;
      gleu.tokenizer = ConfigTokenizer(config);
      manifest = gecsynth::RunScoreGleu(gleu);
    } else if (*cmd_span) {
      if (!span_pairs.empty()) span.pairs = span_pairs;
      if (!span_gold.empty()) span.gold_m2 = span_gold;
      span.tokenizer = ConfigTokenizer(config);
      manifest = gecsynth::RunScoreSpan(span);
    } else if (*cmd_m2c) {
      m2.tokenizer = ConfigTokenizer(config);
      manifest = gecsynth::RunM2Convert(m2);
    } else if (*cmd_stats) {
      stats.tokenizer = ConfigTokenizer(config);
      manifest = gecsynth::RunStats(stats);
    }
    // Score and stats print their report; the other commands their manifest.
    if (*cmd_gleu || *cmd_span || *cmd_stats) {
      Print(manifest.report, g.pretty);
    } else {
      Print(manifest.ToJson(), g.pretty);
    }
    return kOk;
  } catch (const gecsynth::ArgumentError& e) {
    return Fail(kUsage, "usage error", e.what());
  } catch (const gecsynth::ConfigError& e) {
    return Fail(kConfig, "config error", e.what());
  } catch (const gecsynth::IoError& e) {
    return Fail(kIo, "I/O error", e.what());
  } catch (const gecsynth::FormatError& e) {
    return Fail(kFormat, "format error", e.what());
  } catch (const gecsynth::ExhaustionError& e) {
    return Fail(kExhaustion, "exhaustion", e.what());
  } catch (const gecsynth::AlignmentError& e) {
    return Fail(kAlignment, "alignment error", e.what());
  } catch (const gecsynth::IntegrityError& e) {
    return Fail(kIntegrity, "integrity error", e.what());
  } catch (const std::exception& e) {
    return Fail(kInternal, "internal error", e.what());
  }
}
