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

#include "gecsynth/pipeline.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <thread>

#include "gecsynth/errors.h"
#include "gecsynth/filter.h"
#include "gecsynth/m2.h"
#include "gecsynth/rng.h"
#include "gecsynth/span.h"
#include "gecsynth/split.h"
#include "gecsynth/text.h"
#include "gecsynth/verify.h"

#ifndef GECSYNTH_VERSION
#define GECSYNTH_VERSION "0.0.0"
#endif

namespace gecsynth {
namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string Hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

double Round1(double x) { return std::round(x * 10.0) / 10.0; }

std::optional<std::string> ExistingSidecar(const std::string& pairs_path) {
  const std::string p = SidecarPath(pairs_path);
  if (fs::exists(p)) return p;
  return std::nullopt;
}

void EnsureDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir + "': " + ec.message());
}

std::string JoinPath(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

// Runs fn(worker, begin, end) on contiguous shards of [0, n), one thread per
// worker, and rethrows the first worker exception.
template <typename Fn>
void ParallelShards(size_t n, size_t workers, Fn fn) {
  workers = std::max<size_t>(1, std::min(workers, std::max<size_t>(n, 1)));
  if (workers == 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      try {
        fn(w, n * w / workers, n * (w + 1) / workers);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

ordered_json OpCountersJson(const OpCounters& c) {
  ordered_json ops = ordered_json::object();
  for (NoiseOp op : kAllNoiseOps) {
    const size_t i = OpIndex(op);
    ordered_json o;
    o["applicable"] = c.applicable[i];
    o["applied"] = c.applied[i];
    o["records"] = c.records[i];
    o["rate"] = c.applicable[i] == 0
                    ? 0.0
                    : static_cast<double>(c.applied[i]) /
                          static_cast<double>(c.applicable[i]);
    ops[std::string(NoiseOpName(op))] = std::move(o);
  }
  return ops;
}

std::vector<TokenList> TokenizeAll(const Tokenizer& tokenizer,
                                   const std::vector<std::string>& lines) {
  std::vector<TokenList> out;
  out.reserve(lines.size());
  for (const std::string& l : lines) out.push_back(tokenizer.Surfaces(l));
  return out;
}

void CheckAligned(size_t expected, size_t got, const std::string& what) {
  if (expected != got) {
    throw AlignmentError(what + " has " + std::to_string(got) + " lines, expected " +
                         std::to_string(expected));
  }
}

std::vector<ParallelPair> ComposeBatch(const NoiseEngine& engine,
                                       const std::vector<NoisySentence>& batch,
                                       size_t workers, OpCounters* counters) {
  std::vector<ParallelPair> out(batch.size());
  std::vector<OpCounters> partial(std::max<size_t>(workers, 1));
  ParallelShards(batch.size(), workers, [&](size_t w, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) out[i] = engine.Compose(batch[i], &partial[w]);
  });
  if (counters != nullptr) {
    for (const OpCounters& p : partial) counters->Merge(p);
  }
  return out;
}

}  // namespace

std::string_view ToolVersion() { return GECSYNTH_VERSION; }

ordered_json RunManifest::ToJson(bool with_wall_time) const {
  ordered_json j;
  j["command"] = command;
  j["tool_version"] = std::string(ToolVersion());
  j["config_hash"] = config_hash;
  j["seed"] = seed;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["counts"] = counts;
  if (op_counts) {
    j["sentences"] = op_counts->sentences;
    j["changed"] = op_counts->changed;
    j["length_guard_reverts"] = op_counts->length_guard_reverts;
    j["ops"] = OpCountersJson(*op_counts);
  }
  if (!report.is_null()) j["report"] = report;
  if (with_wall_time) j["wall_seconds"] = wall_seconds;
  return j;
}

void RunManifest::WriteTo(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write manifest '" + path + "'");
  out << ToJson().dump(2) << '\n';
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::string ConfigHash(const NoiseConfig& config) {
  return Hex64(StableHash(config.ToJson()));
}

// --- preprocess --------------------------------------------------------------

RunManifest RunPreprocess(const PreprocessOptions& options) {
  const Stopwatch clock;
  const FilterRules rules =
      options.rules_path ? FilterRules::Load(*options.rules_path) : FilterRules::Default();
  std::string blocklist_path = rules.misspellings_path;
  if (blocklist_path.empty() && options.misspellings_path) {
    blocklist_path = *options.misspellings_path;
  }
  MisspellingLexicon blocklist;
  if (!blocklist_path.empty()) blocklist = MisspellingLexicon::Load(blocklist_path);
  const Tokenizer tokenizer = options.abbreviations_path
                                  ? Tokenizer::FromAbbreviationFile(*options.abbreviations_path)
                                  : Tokenizer();
  const SentenceFilter filter(rules, &blocklist, tokenizer);

  RunManifest m;
  m.command = "preprocess";
  m.inputs = {options.input};
  if (options.rules_path) m.inputs.push_back(*options.rules_path);
  if (!blocklist_path.empty()) m.inputs.push_back(blocklist_path);
  const std::string rejected_path = options.output + ".rejected.tsv";
  m.outputs = {options.output, rejected_path};

  std::vector<char32_t> charset(rules.allowed_charset.begin(), rules.allowed_charset.end());
  std::sort(charset.begin(), charset.end());
  ordered_json rules_json;
  rules_json["allowed_charset"] = EncodeUtf8(std::u32string(charset.begin(), charset.end()));
  rules_json["min_allowed_ratio"] = rules.min_allowed_ratio;
  rules_json["min_len"] = rules.min_len;
  rules_json["max_len"] = rules.max_len;
  rules_json["misspellings"] = blocklist_path;
  m.config_hash = Hex64(StableHash(rules_json.dump()));

  PlainCorpusReader reader(options.input, options.policy);
  std::ofstream out(options.output, std::ios::binary);
  if (!out) throw IoError("cannot write '" + options.output + "'");
  std::ofstream rejected(rejected_path, std::ios::binary);
  if (!rejected) throw IoError("cannot write '" + rejected_path + "'");

  uint64_t read = 0;
  uint64_t kept = 0;
  std::map<std::string, uint64_t> by_reason;
  for (RejectReason r : kAllRejectReasons) by_reason[std::string(RejectReasonName(r))] = 0;
  SentenceRecord record;
  while (reader.Next(&record)) {
    ++read;
    const auto verdict = filter.Check(record);
    if (!verdict) {
      out << record.text << '\n';
      ++kept;
      continue;
    }
    const std::string reason(RejectReasonName(*verdict));
    ++by_reason[reason];
    rejected << record.id << '\t' << reason << '\t' << EscapeField(record.text) << '\n';
  }
  out.close();
  rejected.close();
  if (!out || !rejected) throw IoError("write failed for '" + options.output + "'");

  m.counts["read"] = read;
  m.counts["kept"] = kept;
  for (const auto& [reason, n] : by_reason) m.counts["rejected." + reason] = n;
  m.counts["skipped_undecodable"] = reader.skipped();
  m.wall_seconds = clock.Seconds();
  m.WriteTo(options.output + ".manifest.json");
  return m;
}

// --- noise -------------------------------------------------------------------

std::vector<ParallelPair> NoiseSentences(const NoiseEngine& engine,
                                         const std::vector<TaggedSentence>& sentences,
                                         size_t workers, OpCounters* counters) {
  std::vector<NoisySentence> batch;
  batch.reserve(sentences.size());
  for (const TaggedSentence& s : sentences) batch.push_back(NoisySentence::FromTagged(s));
  return ComposeBatch(engine, batch, workers, counters);
}

RunManifest RunNoise(const NoiseOptions& options) {
  const Stopwatch clock;
  if (options.workers == 0) throw ArgumentError("--workers must be at least 1");
  if (options.format == InputFormat::kParallel) {
    throw ArgumentError("noise reads tagged or plain corpora");
  }
  const NoiseEngine engine = NoiseEngine::FromConfig(options.config);
  const std::string sidecar = SidecarPath(options.output);

  RunManifest m;
  m.command = "noise";
  m.config_hash = ConfigHash(engine.config());
  m.seed = engine.config().seed;
  m.inputs = {options.input};
  m.outputs = {options.output, sidecar};

  ParallelWriter writer(options.output, sidecar);
  OpCounters counters;
  uint64_t read = 0;
  const size_t batch_size = std::max<size_t>(options.batch_size, 1);
  std::vector<NoisySentence> batch;
  const auto flush = [&]() {
    for (const ParallelPair& p : ComposeBatch(engine, batch, options.workers, &counters)) {
      writer.Write(p);
    }
    batch.clear();
  };

  if (options.format == InputFormat::kTagged) {
    TaggedCorpusReader reader(options.input);
    TaggedSentence s;
    while (reader.Next(&s)) {
      ++read;
      batch.push_back(NoisySentence::FromTagged(s));
      if (batch.size() == batch_size) flush();
    }
  } else {
    PlainCorpusReader reader(options.input, DecodePolicy::kStrict);
    SentenceRecord r;
    while (reader.Next(&r)) {
      ++read;
      batch.push_back(NoisySentence::FromText(r.id, r.text, engine.resources().tokenizer));
      if (batch.size() == batch_size) flush();
    }
  }
  flush();
  writer.Close();

  m.counts["read"] = read;
  m.counts["pairs"] = writer.count();
  m.counts["identity_pairs"] = counters.sentences - counters.changed;
  m.op_counts = counters;
  m.wall_seconds = clock.Seconds();
  m.WriteTo(options.output + ".manifest.json");
  return m;
}

// --- split -------------------------------------------------------------------

RunManifest RunSplit(const SplitOptions& options) {
  const Stopwatch clock;
  EnsureDir(options.output_dir);
  RunManifest m;
  m.command = "split";
  m.seed = options.seed;
  m.inputs = {options.input};

  const auto record = [&](size_t total, size_t train, size_t valid, size_t test) {
    m.counts["read"] = total;
    m.counts["train"] = train;
    m.counts["valid"] = valid;
    m.counts["test"] = test;
  };
  const std::vector<std::string> parts = {"train", "valid", "test"};

  switch (options.format) {
    case InputFormat::kParallel: {
      const auto sidecar = ExistingSidecar(options.input);
      const auto pairs = ReadParallel(options.input, sidecar);
      const auto split = SplitCorpus(pairs, options.valid, options.test, options.seed);
      const std::vector<const std::vector<ParallelPair>*> chunks = {
          &split.train, &split.valid, &split.test};
      for (size_t k = 0; k < parts.size(); ++k) {
        const std::string path = JoinPath(options.output_dir, parts[k] + ".tsv");
        std::optional<std::string> sc;
        if (sidecar) sc = SidecarPath(path);
        WriteParallel(*chunks[k], path, sc);
        m.outputs.push_back(path);
        if (sc) m.outputs.push_back(*sc);
      }
      record(pairs.size(), split.train.size(), split.valid.size(), split.test.size());
      break;
    }
    case InputFormat::kTagged: {
      const auto sentences = ReadTaggedCorpus(options.input);
      const auto split = SplitCorpus(sentences, options.valid, options.test, options.seed);
      const std::vector<const std::vector<TaggedSentence>*> chunks = {
          &split.train, &split.valid, &split.test};
      for (size_t k = 0; k < parts.size(); ++k) {
        const std::string path = JoinPath(options.output_dir, parts[k] + ".tagged");
        WriteTaggedCorpus(*chunks[k], path);
        m.outputs.push_back(path);
      }
      record(sentences.size(), split.train.size(), split.valid.size(), split.test.size());
      break;
    }
    case InputFormat::kPlain: {
      const auto records = ReadPlainCorpus(options.input);
      const auto split = SplitCorpus(records, options.valid, options.test, options.seed);
      const std::vector<const std::vector<SentenceRecord>*> chunks = {
          &split.train, &split.valid, &split.test};
      for (size_t k = 0; k < parts.size(); ++k) {
        const std::string path = JoinPath(options.output_dir, parts[k] + ".txt");
        WritePlainCorpus(*chunks[k], path);
        m.outputs.push_back(path);
      }
      record(records.size(), split.train.size(), split.valid.size(), split.test.size());
      break;
    }
  }
  m.wall_seconds = clock.Seconds();
  m.WriteTo(JoinPath(options.output_dir, "manifest.json"));
  return m;
}

// --- make-testsets -----------------------------------------------------------

RunManifest RunMakeTestsets(const TestsetOptions& options) {
  const Stopwatch clock;
  const NoiseEngine engine = NoiseEngine::FromConfig(options.config);
  std::vector<std::string> types = options.types;
  if (types.empty()) types.assign(kDefaultTestSets.begin(), kDefaultTestSets.end());
  std::vector<std::pair<std::string, NoiseOp>> jobs;
  for (const std::string& t : types) {
    const auto op = TestSetOp(t);
    if (!op) throw ConfigError("unknown test set type '" + t + "'");
    jobs.emplace_back(t, *op);
  }
  const auto corpus = ReadTaggedCorpus(options.input);
  EnsureDir(options.output_dir);

  RunManifest m;
  m.command = "make-testsets";
  m.config_hash = ConfigHash(engine.config());
  m.seed = engine.config().seed;
  m.inputs = {options.input};
  m.counts["read"] = corpus.size();

  const Tokenizer& tokenizer = engine.resources().tokenizer;
  std::vector<std::string> exhausted;
  for (const auto& [name, op] : jobs) {
    std::vector<ParallelPair> pairs;
    try {
      pairs = engine.GenerateTypedTestset(corpus, op, options.per_type);
    } catch (const ExhaustionError& e) {
      exhausted.push_back(name + " (" + e.what() + ")");
      m.counts["testset." + name] = 0;
      continue;
    }
    std::vector<M2Entry> gold;
    gold.reserve(pairs.size());
    for (const ParallelPair& p : pairs) {
      const VerifyResult v = VerifyOpIsolation(p, op, tokenizer);
      if (!v.ok) throw IntegrityError("test set " + name + ": " + v.detail);
      TokenList src = tokenizer.Surfaces(p.source);
      const TokenList tgt = tokenizer.Surfaces(p.target);
      std::vector<EditSpan> edits = ExtractEdits(src, tgt);
      gold.push_back({std::move(src), std::move(edits)});
    }
    const std::string path = JoinPath(options.output_dir, name + ".tsv");
    const std::string m2_path = JoinPath(options.output_dir, name + ".m2");
    WriteParallel(pairs, path, SidecarPath(path));
    WriteM2File(gold, m2_path);
    m.outputs.push_back(path);
    m.outputs.push_back(SidecarPath(path));
    m.outputs.push_back(m2_path);
    m.counts["testset." + name] = pairs.size();
  }
  m.wall_seconds = clock.Seconds();
  m.WriteTo(JoinPath(options.output_dir, "manifest.json"));
  if (!exhausted.empty()) {
    throw ExhaustionError("not enough applicable sentences for: " +
                          JoinStrings(exhausted, "; "));
  }
  return m;
}

// --- score -------------------------------------------------------------------

RunManifest RunScoreGleu(const GleuOptions& options) {
  const Stopwatch clock;
  RunManifest m;
  m.command = "score gleu";
  m.seed = options.seed;

  std::vector<std::string> sources;
  std::vector<std::vector<std::string>> references;  // [file][line]
  if (options.pairs) {
    if (options.source || !options.references.empty()) {
      throw ArgumentError("give either --pairs or --source/--reference");
    }
    m.inputs.push_back(*options.pairs);
    std::vector<std::string> refs;
    for (ParallelPair& p : ReadParallel(*options.pairs)) {
      sources.push_back(std::move(p.source));
      refs.push_back(std::move(p.target));
    }
    references.push_back(std::move(refs));
  } else {
    if (!options.source || options.references.empty()) {
      throw ArgumentError("score gleu needs --pairs, or --source and --reference");
    }
    m.inputs.push_back(*options.source);
    sources = ReadLines(*options.source);
    for (const std::string& r : options.references) {
      m.inputs.push_back(r);
      references.push_back(ReadLines(r));
      CheckAligned(sources.size(), references.back().size(), "reference '" + r + "'");
    }
  }
  std::vector<std::string> hyps;
  if (options.hypothesis == kIdentityHypothesis) {
    hyps = sources;
  } else {
    m.inputs.push_back(options.hypothesis);
    hyps = ReadLines(options.hypothesis);
    CheckAligned(sources.size(), hyps.size(), "hypothesis '" + options.hypothesis + "'");
  }
  if (sources.empty()) throw FormatError("nothing to score: no sentences");

  const auto src_tok = TokenizeAll(options.tokenizer, sources);
  const auto hyp_tok = TokenizeAll(options.tokenizer, hyps);
  std::vector<std::vector<TokenList>> ref_tok(sources.size());
  for (const auto& file : references) {
    for (size_t i = 0; i < file.size(); ++i) {
      ref_tok[i].push_back(options.tokenizer.Surfaces(file[i]));
      if (ref_tok[i].back().empty()) {
        throw FormatError("empty reference on line " + std::to_string(i + 1));
      }
    }
  }

  ordered_json report;
  if (references.size() == 1) {
    std::vector<GleuTriple> triples(sources.size());
    for (size_t i = 0; i < sources.size(); ++i) {
      triples[i] = {src_tok[i], ref_tok[i][0], hyp_tok[i]};
    }
    const GleuReport r = GleuCorpus(triples, options.max_n, options.averaging);
    report["score"] = Round1(r.score);
    report["score_exact"] = r.score;
    report["per_n_precision"] = r.per_n_precision;
    report["brevity_penalty"] = r.brevity_penalty;
    report["sentences"] = r.sentences;
    report["averaging"] = options.averaging == GleuAveraging::kMicro ? "micro" : "macro";
    report["hyp_len"] = r.hyp_len;
    report["ref_len"] = r.ref_len;
    report["empty_hypothesis"] = r.empty_hypothesis;
    ordered_json counts = ordered_json::array();
    for (size_t n = 0; n < r.counts.size(); ++n) {
      const OrderCounts& c = r.counts[n];
      counts.push_back({{"n", n + 1},
                        {"matched", c.matched},
                        {"penalized", c.penalized},
                        {"credited", c.credited},
                        {"hyp_total", c.hyp_total},
                        {"ref_total", c.ref_total}});
    }
    report["counts"] = std::move(counts);
  } else {
    const double score = GleuMultiref(src_tok, ref_tok, hyp_tok, options.iterations,
                                      options.seed, options.max_n, options.averaging);
    report["score"] = Round1(score);
    report["score_exact"] = score;
    report["sentences"] = sources.size();
    report["references"] = references.size();
    report["iterations"] = options.iterations;
    report["averaging"] = options.averaging == GleuAveraging::kMicro ? "micro" : "macro";
  }
  m.counts["sentences"] = sources.size();
  m.report = std::move(report);
  m.wall_seconds = clock.Seconds();
  return m;
}

RunManifest RunScoreSpan(const SpanOptions& options) {
  const Stopwatch clock;
  RunManifest m;
  m.command = "score span";
  std::vector<SpanEntry> entries;
  if (options.pairs.has_value() == options.gold_m2.has_value()) {
    throw ArgumentError("score span needs exactly one of --pairs or --gold");
  }
  if (options.gold_m2) {
    m.inputs.push_back(*options.gold_m2);
    for (M2Entry& e : ReadM2File(*options.gold_m2, options.annotator)) {
      entries.push_back({std::move(e.source), std::move(e.edits), {}});
    }
  } else {
    m.inputs.push_back(*options.pairs);
    for (const ParallelPair& p : ReadParallel(*options.pairs)) {
      TokenList src = options.tokenizer.Surfaces(p.source);
      std::vector<EditSpan> gold = ExtractEdits(src, options.tokenizer.Surfaces(p.target));
      entries.push_back({std::move(src), std::move(gold), {}});
    }
  }
  if (options.hypothesis == kIdentityHypothesis) {
    for (SpanEntry& e : entries) e.hypothesis = e.source;
  } else {
    m.inputs.push_back(options.hypothesis);
    const auto hyps = ReadLines(options.hypothesis);
    CheckAligned(entries.size(), hyps.size(), "hypothesis '" + options.hypothesis + "'");
    for (size_t i = 0; i < entries.size(); ++i) {
      entries[i].hypothesis = options.tokenizer.Surfaces(hyps[i]);
    }
  }
  const SpanScore s = ScoreCorpusSpans(entries);
  ordered_json report;
  report["tp"] = s.tp;
  report["fp"] = s.fp;
  report["fn"] = s.fn;
  report["precision"] = s.precision;
  report["recall"] = s.recall;
  report["f05"] = s.f05;
  report["sentences"] = entries.size();
  m.counts["sentences"] = entries.size();
  m.report = std::move(report);
  m.wall_seconds = clock.Seconds();
  return m;
}

// --- m2 convert --------------------------------------------------------------

RunManifest RunM2Convert(const M2ConvertOptions& options) {
  const Stopwatch clock;
  RunManifest m;
  m.command = "m2 convert";
  m.inputs = {options.input};
  m.outputs = {options.output};
  if (options.input.ends_with(".m2")) {
    std::vector<ParallelPair> pairs;
    size_t k = 0;
    for (const M2Entry& e : ReadM2File(options.input, options.annotator)) {
      ParallelPair p;
      p.id = std::to_string(++k);
      p.source = JoinStrings(e.source, " ");
      p.target = JoinStrings(ApplyEdits(e.source, e.edits), " ");
      pairs.push_back(std::move(p));
    }
    WriteParallel(pairs, options.output);
    m.counts["entries"] = pairs.size();
  } else {
    std::vector<M2Entry> entries;
    uint64_t edits = 0;
    for (const ParallelPair& p : ReadParallel(options.input)) {
      TokenList src = options.tokenizer.Surfaces(p.source);
      std::vector<EditSpan> e = ExtractEdits(src, options.tokenizer.Surfaces(p.target));
      edits += e.size();
      entries.push_back({std::move(src), std::move(e)});
    }
    WriteM2File(entries, options.output, options.annotator);
    m.counts["entries"] = entries.size();
    m.counts["edits"] = edits;
  }
  m.wall_seconds = clock.Seconds();
  return m;
}

// --- stats -------------------------------------------------------------------

RunManifest RunStats(const StatsOptions& options) {
  const Stopwatch clock;
  RunManifest m;
  m.command = "stats";
  m.inputs = {options.pairs};
  const auto sidecar = ExistingSidecar(options.pairs);
  if (sidecar) m.inputs.push_back(*sidecar);
  const auto pairs = ReadParallel(options.pairs, sidecar);

  std::array<uint64_t, kNumNoiseOps> records{};
  std::array<uint64_t, kNumNoiseOps> pairs_with{};
  uint64_t identity = 0;
  uint64_t total_edits = 0;
  double ratio_sum = 0.0;
  double ratio_min = std::numeric_limits<double>::infinity();
  double ratio_max = 0.0;
  uint64_t ratio_n = 0;
  for (const ParallelPair& p : pairs) {
    if (p.source == p.target) ++identity;
    if (sidecar) {
      total_edits += p.edits.size();
      for (const EditRecord& r : p.edits) ++records[OpIndex(r.op)];
      for (NoiseOp op : OpsInLog(p.edits)) ++pairs_with[OpIndex(op)];
    } else {
      total_edits += ExtractEdits(options.tokenizer.Surfaces(p.source),
                                  options.tokenizer.Surfaces(p.target))
                         .size();
    }
    const size_t t = CodePointCount(p.target);
    if (t > 0) {
      const double r = static_cast<double>(CodePointCount(p.source)) / static_cast<double>(t);
      ratio_sum += r;
      ratio_min = std::min(ratio_min, r);
      ratio_max = std::max(ratio_max, r);
      ++ratio_n;
    }
  }
  ordered_json report;
  report["pairs"] = pairs.size();
  report["identity_pairs"] = identity;
  report["edit_source"] = sidecar ? "log" : "extracted";
  report["mean_edit_count"] =
      pairs.empty() ? 0.0 : static_cast<double>(total_edits) / static_cast<double>(pairs.size());
  ordered_json hist = ordered_json::object();
  ordered_json with = ordered_json::object();
  if (sidecar) {
    for (NoiseOp op : kAllNoiseOps) {
      if (records[OpIndex(op)] == 0) continue;
      hist[std::string(NoiseOpName(op))] = records[OpIndex(op)];
      with[std::string(NoiseOpName(op))] = pairs_with[OpIndex(op)];
    }
  }
  report["op_records"] = std::move(hist);
  report["op_pairs"] = std::move(with);
  report["length_ratio"] = {{"mean", ratio_n == 0 ? 0.0 : ratio_sum / ratio_n},
                            {"min", ratio_n == 0 ? 0.0 : ratio_min},
                            {"max", ratio_max}};
  m.counts["pairs"] = pairs.size();
  m.report = std::move(report);
  m.wall_seconds = clock.Seconds();
  return m;
}

}  // namespace gecsynth
