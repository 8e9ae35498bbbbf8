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

// The corruption engine. Ops work on a NoisySentence (tagged tokens plus the
// whitespace between them) and log every change as an EditRecord against
// the rendered text.
//
// Compose runs the ops in kApplicationOrder. Each op draws from its own
// stream, seeded from (seed, op name, sentence id), so a sentence's noise
// does not depend on which worker handles it or on what other sentences
// exist. The stream's first draw decides whether the op is attempted.

#ifndef GECSYNTH_NOISE_ENGINE_H_
#define GECSYNTH_NOISE_ENGINE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gecsynth/corpus_io.h"
#include "gecsynth/edit_log.h"
#include "gecsynth/features.h"
#include "gecsynth/morpho.h"
#include "gecsynth/noise_config.h"
#include "gecsynth/noise_op.h"
#include "gecsynth/rng.h"
#include "gecsynth/tokenizer.h"

namespace gecsynth {

// Lexicons shared read-only by all workers.
struct NoiseResources {
  InflectionLexicon inflection;
  MisspellingLexicon misspellings;
  ObliqueVerbLexicon oblique_verbs;
  CharRuleTable spelling_rules = CharRuleTable::DefaultSpellingRules();
  CharRuleTable accents = CharRuleTable::DefaultAccentPairs();
  Tokenizer tokenizer;

  // Missing paths leave the lexicon empty (or the rule table at its default).
  static NoiseResources Load(const LexiconPaths& paths);
};

struct NoisyToken {
  std::string surface;
  std::string lemma;  // empty once an op has made the token's tags stale
  std::string pos;
  FeatureSet feats;
  TokenKind kind = TokenKind::kWord;

  friend bool operator==(const NoisyToken&, const NoisyToken&) = default;
};

// tokens[i] sits between gaps[i] and gaps[i + 1].
struct NoisySentence {
  std::string id;
  std::vector<NoisyToken> tokens;
  std::vector<std::string> gaps;

  std::string Text() const;

  // Uses raw_text for spacing when it is present and consistent with the
  // tokens; otherwise joins tokens with single spaces, except none before
  // closing punctuation or after opening brackets and quotes.
  static NoisySentence FromTagged(const TaggedSentence& sentence);
  // Untagged sentence; only the tag-free ops find sites in it.
  static NoisySentence FromText(std::string id, std::string_view text,
                                const Tokenizer& tokenizer);

  friend bool operator==(const NoisySentence&, const NoisySentence&) = default;
};

struct NoiseOutcome {
  NoisySentence sentence;
  EditLog log;
  bool changed = false;  // == !log.empty()
};

// Per-op tallies over a run. `applicable` counts sentences where the op had a
// site when its turn came, `applied` those where it changed the text.
struct OpCounters {
  std::array<uint64_t, kNumNoiseOps> applicable{};
  std::array<uint64_t, kNumNoiseOps> applied{};
  std::array<uint64_t, kNumNoiseOps> records{};
  uint64_t sentences = 0;
  uint64_t changed = 0;
  uint64_t length_guard_reverts = 0;

  void Merge(const OpCounters& other);
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

inline constexpr double kMinLengthRatio = 0.3;
inline constexpr double kMaxLengthRatio = 3.0;

// True when len(source) is within [0.3, 3] times len(target), in code points.
bool WithinLengthBounds(std::string_view source, std::string_view target);

class NoiseEngine {
 public:
  NoiseEngine(NoiseConfig config,
              std::shared_ptr<const NoiseResources> resources);

  // Loads the lexicons named in the config.
  static NoiseEngine FromConfig(const NoiseConfig& config);

  // Runs one op unconditionally (no probability draw); unchanged outcome when
  // no site exists.
  NoiseOutcome ApplyOp(NoiseOp op, const NoisySentence& sentence,
                       Rng& rng) const;

  // Whether `op` has at least one site in `sentence`.
  bool IsApplicable(NoiseOp op, const NoisySentence& sentence) const;

  // All enabled ops in application order. target = clean text, source =
  // noised text. If the stacked ops push the source outside the length
  // bounds, the offending op is suppressed for this sentence and the
  // sentence is redone.
  ParallelPair Compose(const NoisySentence& sentence,
                       OpCounters* counters = nullptr) const;
  ParallelPair Compose(const TaggedSentence& sentence,
                       OpCounters* counters = nullptr) const;

  // The first n sentences (in corpus order) where `op` applies, each noised
  // by `op` alone. Throws ExhaustionError naming the op when fewer exist.
  std::vector<ParallelPair> GenerateTypedTestset(
      const std::vector<TaggedSentence>& corpus, NoiseOp op, size_t n) const;

  // The stream `op` uses for the sentence with this id.
  Rng StreamFor(NoiseOp op, std::string_view sentence_id) const;

  const NoiseConfig& config() const { return config_; }
  const NoiseResources& resources() const { return *resources_; }

 private:
  class Editor;
  struct Attempt {
    bool had_site = false;
  };

  Attempt Run(NoiseOp op, Editor& ed, Rng& rng) const;
  // nullopt when op `*violator` broke the length bounds.
  std::optional<ParallelPair> ComposeOnce(const NoisySentence& sentence,
                                          uint32_t suppressed,
                                          OpCounters* counters,
                                          NoiseOp* violator) const;

  // Grammatical.
  Attempt SwapNounCase(Editor& ed, Rng& rng) const;
  Attempt SwapMood(Editor& ed, Rng& rng) const;
  Attempt Dativitis(Editor& ed, Rng& rng) const;
  Attempt SplitCompound(Editor& ed, Rng& rng) const;
  Attempt Misspelling(Editor& ed, Rng& rng) const;
  // Word level.
  Attempt DeleteSpace(Editor& ed, Rng& rng) const;
  Attempt DeleteCommas(Editor& ed, Rng& rng) const;
  Attempt SwapWordOrder(Editor& ed, Rng& rng) const;
  Attempt DuplicateWord(Editor& ed, Rng& rng) const;
  // Character level.
  Attempt DuplicateChar(Editor& ed, Rng& rng) const;
  Attempt DropChar(Editor& ed, Rng& rng) const;
  Attempt RewriteChars(Editor& ed, Rng& rng, const CharRuleTable& table) const;
  Attempt ReplaceRandomChar(Editor& ed, Rng& rng) const;

  bool HasSite(NoiseOp op, const NoisySentence& s) const;

  NoiseConfig config_;
  std::shared_ptr<const NoiseResources> resources_;
  std::u32string alphabet_;
};

}  // namespace gecsynth

#endif  // GECSYNTH_NOISE_ENGINE_H_
