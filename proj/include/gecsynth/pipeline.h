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

// File-level commands behind the CLI: preprocess, noise, split,
// make-testsets, score, m2 convert and stats. Each returns a RunManifest;
// commands that write files also store it as JSON next to their output.

#ifndef GECSYNTH_PIPELINE_H_
#define GECSYNTH_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gecsynth/corpus_io.h"
#include "gecsynth/gleu.h"
#include "gecsynth/noise_config.h"
#include "gecsynth/noise_engine.h"
#include "gecsynth/tokenizer.h"

namespace gecsynth {

std::string_view ToolVersion();

struct RunManifest {
  std::string command;
  std::string config_hash;  // 16 hex digits; empty when no config applies
  uint64_t seed = 0;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::map<std::string, uint64_t> counts;
  std::optional<OpCounters> op_counts;
  nlohmann::ordered_json report;  // command-specific results
  double wall_seconds = 0.0;

  nlohmann::ordered_json ToJson(bool with_wall_time = true) const;
  void WriteTo(const std::string& path) const;
};

// Hex FNV-1a of the canonical config JSON.
std::string ConfigHash(const NoiseConfig& config);

struct PreprocessOptions {
  std::string input;
  std::string output;
  std::optional<std::string> rules_path;
  // Blocklist used when the rules file names none.
  std::optional<std::string> misspellings_path;
  std::optional<std::string> abbreviations_path;
  DecodePolicy policy = DecodePolicy::kStrict;
};

// Writes the kept sentences to `output`, rejections (id, reason, text) to
// `<output>.rejected.tsv` and the manifest to `<output>.manifest.json`.
RunManifest RunPreprocess(const PreprocessOptions& options);

enum class InputFormat { kTagged, kPlain, kParallel };

struct NoiseOptions {
  std::string input;
  std::string output;
  NoiseConfig config;
  size_t workers = 1;
  InputFormat format = InputFormat::kTagged;  // kTagged or kPlain
  size_t batch_size = 8192;
};

// Streams the input in batches, shards each batch over `workers` threads and
// writes pairs in input order, with edit logs in the sidecar. The output
// does not depend on `workers`.
RunManifest RunNoise(const NoiseOptions& options);

// In-memory variant used by tests and bindings.
std::vector<ParallelPair> NoiseSentences(const NoiseEngine& engine,
                                         const std::vector<TaggedSentence>& sentences,
                                         size_t workers,
                                         OpCounters* counters = nullptr);

struct SplitOptions {
  std::string input;
  std::string output_dir;
  size_t valid = 2000;
  size_t test = 4000;
  uint64_t seed = 0;
  InputFormat format = InputFormat::kParallel;
};

// Writes train/valid/test files named after the format (.tsv, .tagged or
// .txt) into output_dir; parallel sidecars are split alongside.
RunManifest RunSplit(const SplitOptions& options);

struct TestsetOptions {
  std::string input;  // tagged corpus
  std::string output_dir;
  NoiseConfig config;
  size_t per_type = 100;
  std::vector<std::string> types;  // empty: the seven default sets
};

// One `<type>.tsv` (with sidecar) and `<type>.m2` per type. Every pair is
// checked with VerifyOpIsolation; a failure throws IntegrityError. Types
// without enough applicable sentences are collected and reported together
// in one ExhaustionError after the others are written.
RunManifest RunMakeTestsets(const TestsetOptions& options);

inline constexpr std::string_view kIdentityHypothesis = "identity";

struct GleuOptions {
  std::optional<std::string> pairs;       // source and reference from pairs
  std::optional<std::string> source;
  std::vector<std::string> references;    // several enable multi-reference
  std::string hypothesis = "identity";    // path or "identity"
  size_t max_n = kGleuMaxN;
  GleuAveraging averaging = GleuAveraging::kMicro;
  size_t iterations = 500;
  uint64_t seed = 0;
  Tokenizer tokenizer;
};

// Line-count mismatches throw AlignmentError.
RunManifest RunScoreGleu(const GleuOptions& options);

struct SpanOptions {
  std::optional<std::string> pairs;  // gold edits extracted from the pairs
  std::optional<std::string> gold_m2;
  std::string hypothesis = "identity";
  int annotator = 0;
  Tokenizer tokenizer;
};

RunManifest RunScoreSpan(const SpanOptions& options);

struct M2ConvertOptions {
  std::string input;   // pairs file, or an .m2 file
  std::string output;  // .m2 file, or a pairs file
  int annotator = 0;
  Tokenizer tokenizer;
};

// Pairs to M2 (gold edits = ExtractEdits(tokens(source), tokens(target))),
// or M2 to pairs (source tokens joined by spaces, target with edits applied),
// chosen by whether the input ends in ".m2".
RunManifest RunM2Convert(const M2ConvertOptions& options);

struct StatsOptions {
  std::string pairs;
  Tokenizer tokenizer;
};

// Uses the sidecar logs when present, extracted token edits otherwise.
RunManifest RunStats(const StatsOptions& options);

}  // namespace gecsynth

#endif  // GECSYNTH_PIPELINE_H_
