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

#include "gecsynth/noise_engine.h"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <utility>

#include "gecsynth/errors.h"
#include "gecsynth/text.h"

namespace gecsynth {
namespace {

constexpr std::array<std::string_view, 4> kCases = {"nom", "acc", "dat", "gen"};

bool InList(const std::vector<std::string>& list, std::string_view tag) {
  return !tag.empty() && std::find(list.begin(), list.end(), tag) != list.end();
}

bool IsWord(const NoisyToken& t) { return t.kind == TokenKind::kWord; }

// Tags no longer describe the surface.
void Untag(NoisyToken* t) {
  t->lemma.clear();
  t->pos.clear();
  t->feats = FeatureSet();
}

bool NoSpaceBefore(std::string_view s) {
  static const std::set<std::string_view> kClosing = {
      ".", ",", ";", ":", "!", "?", ")", "]", "}", "»", "“", "”", "…", "%"};
  return kClosing.contains(s);
}

bool NoSpaceAfter(std::string_view s) {
  static const std::set<std::string_view> kOpening = {"(", "[", "{", "«", "„"};
  return kOpening.contains(s);
}

// Gaps that place `tokens` in `raw`, or nullopt if raw holds anything else.
std::optional<std::vector<std::string>> GapsFromRaw(
    std::string_view raw, const std::vector<NoisyToken>& tokens) {
  std::vector<std::string> gaps;
  gaps.reserve(tokens.size() + 1);
  size_t pos = 0;
  const auto take_space = [&]() {
    const size_t start = pos;
    while (pos < raw.size()) {
      size_t next = pos;
      if (!IsSpace(NextCodePoint(raw, &next))) break;
      pos = next;
    }
    return std::string(raw.substr(start, pos - start));
  };
  for (const NoisyToken& t : tokens) {
    gaps.push_back(take_space());
    if (raw.compare(pos, t.surface.size(), t.surface) != 0) return std::nullopt;
    pos += t.surface.size();
  }
  gaps.push_back(take_space());
  if (pos != raw.size()) return std::nullopt;
  return gaps;
}

// Byte ranges of every directed rule match inside one word.
struct CharSite {
  size_t pos;
  size_t len;
  const std::string* to;
};

std::vector<CharSite> CharSites(std::string_view word,
                                const CharRuleTable& table) {
  std::vector<CharSite> sites;
  for (const auto& [from, to] : table.directed()) {
    for (size_t p = word.find(from); p != std::string_view::npos;
         p = word.find(from, p + 1)) {
      sites.push_back({p, from.size(), &to});
    }
  }
  std::sort(sites.begin(), sites.end(), [](const CharSite& a, const CharSite& b) {
    return a.pos != b.pos ? a.pos < b.pos : a.len < b.len;
  });
  return sites;
}

// Site searches. All are pure functions of the sentence.
class SiteFinder {
 public:
  SiteFinder(const NoiseConfig& config, const NoiseResources& res)
      : config_(config), res_(res) {}

  // Lexicon analyses consistent with the token's own tags.
  std::vector<Analysis> Analyses(const NoisyToken& t) const {
    std::vector<Analysis> out;
    if (t.pos.empty()) return out;
    const auto consider = [&](std::string_view surface) {
      for (const Analysis& a : res_.inflection.Analyze(surface)) {
        if (a.pos != t.pos) continue;
        if (!t.lemma.empty() && a.lemma != t.lemma &&
            a.lemma != LowerFirst(t.lemma)) {
          continue;
        }
        if (!t.feats.IsSubsetOf(a.feats)) continue;
        out.push_back(a);
      }
    };
    consider(t.surface);
    if (out.empty() && StartsUpper(t.surface)) consider(LowerFirst(t.surface));
    return out;
  }

  // Surfaces of `a` with `key` set to `value`, recased like `model` and
  // different from it.
  std::vector<std::string> Reinflect(const Analysis& a, std::string_view key,
                                     std::string_view value,
                                     std::string_view model) const {
    std::vector<std::string> out;
    for (const std::string& f :
         res_.inflection.Inflect(a.lemma, a.pos, a.feats.With(key, value))) {
      std::string cased = MatchCapitalization(model, f);
      if (cased != model) out.push_back(std::move(cased));
    }
    return out;
  }

  struct Alternative {
    std::string value;  // the new feature value
    std::vector<std::string> forms;
  };
  struct FeatureSite {
    size_t token;
    Analysis analysis;
    std::vector<Alternative> alternatives;
  };

  std::vector<FeatureSite> NounCaseSites(const NoisySentence& s) const {
    std::vector<FeatureSite> sites;
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      const NoisyToken& t = s.tokens[i];
      if (!InList(config_.tagset.noun, t.pos)) continue;
      for (const Analysis& a : Analyses(t)) {
        const auto current = a.feats.Get("case");
        if (!current) continue;
        FeatureSite site{i, a, {}};
        for (std::string_view c : kCases) {
          if (c == *current) continue;
          auto forms = Reinflect(a, "case", c, t.surface);
          if (!forms.empty()) {
            site.alternatives.push_back({std::string(c), std::move(forms)});
          }
        }
        if (!site.alternatives.empty()) {
          sites.push_back(std::move(site));
          break;
        }
      }
    }
    return sites;
  }

  std::vector<FeatureSite> MoodSites(const NoisySentence& s) const {
    const bool to_subj =
        config_.mood_direction == MoodDirection::kIndicativeToSubjunctive;
    const std::string_view from = to_subj ? "ind" : "subj";
    const std::string_view to = to_subj ? "subj" : "ind";
    std::vector<FeatureSite> sites;
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      const NoisyToken& t = s.tokens[i];
      if (!InList(config_.tagset.verb, t.pos)) continue;
      for (const Analysis& a : Analyses(t)) {
        if (!a.feats.Has("mood", from)) continue;
        auto forms = Reinflect(a, "mood", to, t.surface);
        if (forms.empty()) continue;
        sites.push_back({i, a, {{std::string(to), std::move(forms)}}});
        break;
      }
    }
    return sites;
  }

  struct Reinflection {
    size_t token;
    Analysis analysis;
    std::vector<std::string> forms;
  };
  struct DativeSite {
    size_t verb;
    const ObliqueVerb* entry;
    Reinflection subject;
    std::vector<Reinflection> modifiers;  // agreeing words left of the subject
  };

  const ObliqueVerb* FindOblique(const NoisyToken& t) const {
    if (!t.lemma.empty()) {
      if (const ObliqueVerb* v = res_.oblique_verbs.Find(t.lemma)) return v;
      if (const ObliqueVerb* v = res_.oblique_verbs.Find(LowerFirst(t.lemma))) {
        return v;
      }
      return nullptr;
    }
    for (const Analysis& a : Analyses(t)) {
      if (const ObliqueVerb* v = res_.oblique_verbs.Find(a.lemma)) return v;
    }
    return nullptr;
  }

  // A nominal at `j` in `case_value` that has a dative form.
  std::optional<Reinflection> DativeCandidate(const NoisySentence& s, size_t j,
                                              std::string_view case_value) const {
    const NoisyToken& t = s.tokens[j];
    for (const Analysis& a : Analyses(t)) {
      if (!a.feats.Has("case", case_value)) continue;
      auto forms =
          Reinflect(a, "case", ObliqueVerbLexicon::kTargetCase, t.surface);
      if (!forms.empty()) return Reinflection{j, a, std::move(forms)};
    }
    return std::nullopt;
  }

  // The subject is the nearest nominal up to three tokens before the verb,
  // not across punctuation; failing that, the nominal right after it.
  std::optional<Reinflection> FindSubject(const NoisySentence& s, size_t v,
                                          std::string_view case_value) const {
    for (size_t j = v; j-- > 0 && v - j <= 3;) {
      const NoisyToken& t = s.tokens[j];
      if (t.kind == TokenKind::kPunct) break;
      if (InList(config_.tagset.nominal, t.pos)) {
        if (auto r = DativeCandidate(s, j, case_value)) return r;
        break;
      }
    }
    if (v + 1 < s.tokens.size() &&
        InList(config_.tagset.nominal, s.tokens[v + 1].pos)) {
      return DativeCandidate(s, v + 1, case_value);
    }
    return std::nullopt;
  }

  std::vector<DativeSite> DativeSites(const NoisySentence& s) const {
    std::vector<DativeSite> sites;
    if (res_.oblique_verbs.empty()) return sites;
    for (size_t v = 0; v < s.tokens.size(); ++v) {
      const NoisyToken& t = s.tokens[v];
      if (!InList(config_.tagset.verb, t.pos)) continue;
      const ObliqueVerb* entry = FindOblique(t);
      if (entry == nullptr) continue;
      auto subject = FindSubject(s, v, entry->standard_case);
      if (!subject) continue;
      DativeSite site{v, entry, std::move(*subject), {}};
      for (size_t j = site.subject.token; j-- > 0;) {
        if (!InList(config_.tagset.modifier, s.tokens[j].pos)) break;
        auto m = DativeCandidate(s, j, entry->standard_case);
        if (!m) break;
        site.modifiers.push_back(std::move(*m));
      }
      sites.push_back(std::move(site));
    }
    return sites;
  }

  std::vector<size_t> CompoundSites(const NoisySentence& s) const {
    std::vector<size_t> sites;
    if (res_.inflection.empty()) return sites;
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      if (IsWord(s.tokens[i]) &&
          !res_.inflection
               .ValidCompoundSplits(s.tokens[i].surface,
                                    config_.min_compound_part)
               .empty()) {
        sites.push_back(i);
      }
    }
    return sites;
  }

  const std::vector<std::string>* Variants(const NoisyToken& t) const {
    const auto& v = res_.misspellings.VariantsOf(t.surface);
    if (!v.empty()) return &v;
    if (StartsUpper(t.surface)) {
      const auto& lower = res_.misspellings.VariantsOf(LowerFirst(t.surface));
      if (!lower.empty()) return &lower;
    }
    return nullptr;
  }

  std::vector<size_t> MisspellingSites(const NoisySentence& s) const {
    std::vector<size_t> sites;
    if (res_.misspellings.empty()) return sites;
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      if (IsWord(s.tokens[i]) && Variants(s.tokens[i]) != nullptr) {
        sites.push_back(i);
      }
    }
    return sites;
  }

  // i where tokens i and i + 1 are words with whitespace between them.
  static std::vector<size_t> SpaceSites(const NoisySentence& s) {
    std::vector<size_t> sites;
    for (size_t i = 0; i + 1 < s.tokens.size(); ++i) {
      if (IsWord(s.tokens[i]) && IsWord(s.tokens[i + 1]) &&
          !s.gaps[i + 1].empty()) {
        sites.push_back(i);
      }
    }
    return sites;
  }

  static std::vector<size_t> CommaSites(const NoisySentence& s) {
    std::vector<size_t> sites;
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      if (s.tokens[i].surface == ",") sites.push_back(i);
    }
    return sites;
  }

  // i where tokens i and i + 1 are distinct non-punctuation tokens.
  static std::vector<size_t> SwapSites(const NoisySentence& s) {
    std::vector<size_t> sites;
    const auto movable = [](const NoisyToken& t) {
      return t.kind == TokenKind::kWord || t.kind == TokenKind::kNumber;
    };
    for (size_t i = 0; i + 1 < s.tokens.size(); ++i) {
      if (movable(s.tokens[i]) && movable(s.tokens[i + 1]) &&
          s.tokens[i].surface != s.tokens[i + 1].surface) {
        sites.push_back(i);
      }
    }
    return sites;
  }

  static std::vector<size_t> WordSites(const NoisySentence& s,
                                       size_t min_chars = 1) {
    std::vector<size_t> sites;
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      if (IsWord(s.tokens[i]) &&
          CodePointCount(s.tokens[i].surface) >= min_chars) {
        sites.push_back(i);
      }
    }
    return sites;
  }

  static std::vector<size_t> RuleSites(const NoisySentence& s,
                                       const CharRuleTable& table) {
    std::vector<size_t> sites;
    if (table.empty()) return sites;
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      if (IsWord(s.tokens[i]) && !CharSites(s.tokens[i].surface, table).empty()) {
        sites.push_back(i);
      }
    }
    return sites;
  }

  std::vector<size_t> ReplaceSites(const NoisySentence& s,
                                   const std::u32string& alphabet) const {
    std::vector<size_t> sites;
    for (size_t i : WordSites(s)) {
      if (alphabet.size() >= 2) {
        sites.push_back(i);
        continue;
      }
      for (char32_t c : DecodeUtf8(s.tokens[i].surface)) {
        if (c != alphabet[0]) {
          sites.push_back(i);
          break;
        }
      }
    }
    return sites;
  }

 private:
  const NoiseConfig& config_;
  const NoiseResources& res_;
};

template <typename T>
const T& Pick(const std::vector<T>& items, Rng& rng) {
  return items[rng.Uniform(items.size())];
}

}  // namespace

// Holds the working sentence and turns every change into a log record.
class NoiseEngine::Editor {
 public:
  Editor(const NoisySentence& sentence, EditLog* log)
      : s_(sentence), text_(s_.Text()), log_(log) {}

  NoisySentence& s() { return s_; }
  const std::string& text() const { return text_; }
  void set_op(NoiseOp op) { op_ = op; }

  // Records the change made to the sentence since the last commit.
  void Commit(size_t token) {
    std::string next = s_.Text();
    if (auto record = DiffTexts(op_, token, text_, next)) {
      log_->push_back(std::move(*record));
    }
    text_ = std::move(next);
  }

  void SetSurface(size_t token, std::string surface) {
    s_.tokens[token].surface = std::move(surface);
    Commit(token);
  }

 private:
  NoisySentence s_;
  std::string text_;
  EditLog* log_;
  NoiseOp op_ = NoiseOp::kSwapNounCase;
};

// ---------------------------------------------------------------------------

NoiseResources NoiseResources::Load(const LexiconPaths& paths) {
  NoiseResources res;
  if (paths.inflection) res.inflection = InflectionLexicon::Load(*paths.inflection);
  if (paths.misspellings) {
    res.misspellings = MisspellingLexicon::Load(*paths.misspellings);
  }
  if (paths.oblique_verbs) {
    res.oblique_verbs = ObliqueVerbLexicon::Load(*paths.oblique_verbs);
  }
  if (paths.char_rules) res.spelling_rules = CharRuleTable::Load(*paths.char_rules);
  if (paths.accents) res.accents = CharRuleTable::Load(*paths.accents);
  if (paths.abbreviations) {
    res.tokenizer = Tokenizer::FromAbbreviationFile(*paths.abbreviations);
  }
  return res;
}

std::string NoisySentence::Text() const {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    out += gaps[i];
    out += tokens[i].surface;
  }
  out += gaps.back();
  return out;
}

NoisySentence NoisySentence::FromTagged(const TaggedSentence& sentence) {
  NoisySentence s;
  s.id = sentence.id;
  s.tokens.reserve(sentence.tokens.size());
  for (const TaggedToken& t : sentence.tokens) {
    NoisyToken nt{t.surface, t.lemma == "_" ? "" : t.lemma,
                  t.pos == "_" ? "" : t.pos, t.feats,
                  ClassifySurface(t.surface)};
    s.tokens.push_back(std::move(nt));
  }
  if (sentence.raw_text) {
    if (auto gaps = GapsFromRaw(*sentence.raw_text, s.tokens)) {
      s.gaps = std::move(*gaps);
      return s;
    }
  }
  s.gaps.assign(s.tokens.size() + 1, "");
  for (size_t i = 1; i < s.tokens.size(); ++i) {
    if (!NoSpaceBefore(s.tokens[i].surface) &&
        !NoSpaceAfter(s.tokens[i - 1].surface)) {
      s.gaps[i] = " ";
    }
  }
  return s;
}

NoisySentence NoisySentence::FromText(std::string id, std::string_view text,
                                      const Tokenizer& tokenizer) {
  TokenizedText tokenized = tokenizer.Tokenize(text);
  NoisySentence s;
  s.id = std::move(id);
  for (Token& t : tokenized.tokens) {
    s.tokens.push_back({std::move(t.surface), "", "", FeatureSet(), t.kind});
  }
  s.gaps = std::move(tokenized.gaps);
  return s;
}

void OpCounters::Merge(const OpCounters& other) {
  for (size_t i = 0; i < kNumNoiseOps; ++i) {
    applicable[i] += other.applicable[i];
    applied[i] += other.applied[i];
    records[i] += other.records[i];
  }
  sentences += other.sentences;
  changed += other.changed;
  length_guard_reverts += other.length_guard_reverts;
}

bool WithinLengthBounds(std::string_view source, std::string_view target) {
  const double s = static_cast<double>(CodePointCount(source));
  const double t = static_cast<double>(CodePointCount(target));
  return s >= kMinLengthRatio * t && s <= kMaxLengthRatio * t;
}

// ---------------------------------------------------------------------------

NoiseEngine::NoiseEngine(NoiseConfig config,
                         std::shared_ptr<const NoiseResources> resources)
    : config_(std::move(config)), resources_(std::move(resources)) {
  config_.Validate();
  if (!resources_) resources_ = std::make_shared<NoiseResources>();
  alphabet_ = DecodeUtf8(config_.replacement_alphabet);
}

NoiseEngine NoiseEngine::FromConfig(const NoiseConfig& config) {
  return NoiseEngine(config, std::make_shared<const NoiseResources>(
                                 NoiseResources::Load(config.lexicons)));
}

Rng NoiseEngine::StreamFor(NoiseOp op, std::string_view sentence_id) const {
  return Rng(DeriveSeed(config_.seed, NoiseOpName(op), sentence_id));
}

NoiseOutcome NoiseEngine::ApplyOp(NoiseOp op, const NoisySentence& sentence,
                                  Rng& rng) const {
  NoiseOutcome outcome;
  Editor ed(sentence, &outcome.log);
  ed.set_op(op);
  Run(op, ed, rng);
  outcome.changed = !outcome.log.empty();
  outcome.sentence = outcome.changed ? std::move(ed.s()) : sentence;
  return outcome;
}

bool NoiseEngine::IsApplicable(NoiseOp op, const NoisySentence& sentence) const {
  return HasSite(op, sentence);
}

bool NoiseEngine::HasSite(NoiseOp op, const NoisySentence& s) const {
  const SiteFinder f(config_, *resources_);
  switch (op) {
    case NoiseOp::kSwapNounCase:
      return !f.NounCaseSites(s).empty();
    case NoiseOp::kSwapMood:
      return !f.MoodSites(s).empty();
    case NoiseOp::kDativitis:
      return !f.DativeSites(s).empty();
    case NoiseOp::kSplitCompound:
      return !f.CompoundSites(s).empty();
    case NoiseOp::kMisspelling:
      return !f.MisspellingSites(s).empty();
    case NoiseOp::kDeleteSpace:
      return !SiteFinder::SpaceSites(s).empty();
    case NoiseOp::kDeleteCommas:
      return !SiteFinder::CommaSites(s).empty();
    case NoiseOp::kSwapWordOrder:
      return !SiteFinder::SwapSites(s).empty();
    case NoiseOp::kDuplicateWord:
    case NoiseOp::kDuplicateChar:
      return !SiteFinder::WordSites(s).empty();
    case NoiseOp::kDropChar:
      return !SiteFinder::WordSites(s, 2).empty();
    case NoiseOp::kRuleCharSwap:
      return !SiteFinder::RuleSites(s, resources_->spelling_rules).empty();
    case NoiseOp::kToggleAccent:
      return !SiteFinder::RuleSites(s, resources_->accents).empty();
    case NoiseOp::kReplaceRandomChar:
      return !f.ReplaceSites(s, alphabet_).empty();
  }
  return false;
}

NoiseEngine::Attempt NoiseEngine::Run(NoiseOp op, Editor& ed, Rng& rng) const {
  switch (op) {
    case NoiseOp::kSwapNounCase:
      return SwapNounCase(ed, rng);
    case NoiseOp::kSwapMood:
      return SwapMood(ed, rng);
    case NoiseOp::kDativitis:
      return Dativitis(ed, rng);
    case NoiseOp::kSplitCompound:
      return SplitCompound(ed, rng);
    case NoiseOp::kMisspelling:
      return Misspelling(ed, rng);
    case NoiseOp::kDeleteSpace:
      return DeleteSpace(ed, rng);
    case NoiseOp::kDeleteCommas:
      return DeleteCommas(ed, rng);
    case NoiseOp::kSwapWordOrder:
      return SwapWordOrder(ed, rng);
    case NoiseOp::kDuplicateWord:
      return DuplicateWord(ed, rng);
    case NoiseOp::kDuplicateChar:
      return DuplicateChar(ed, rng);
    case NoiseOp::kDropChar:
      return DropChar(ed, rng);
    case NoiseOp::kRuleCharSwap:
      return RewriteChars(ed, rng, resources_->spelling_rules);
    case NoiseOp::kToggleAccent:
      return RewriteChars(ed, rng, resources_->accents);
    case NoiseOp::kReplaceRandomChar:
      return ReplaceRandomChar(ed, rng);
  }
  return {};
}

// --- Grammatical ops. Up to `intensity` distinct tokens each. ---------------

NoiseEngine::Attempt NoiseEngine::SwapNounCase(Editor& ed, Rng& rng) const {
  const SiteFinder f(config_, *resources_);
  auto sites = f.NounCaseSites(ed.s());
  if (sites.empty()) return {false};
  for (int k = 0; k < config_.op(NoiseOp::kSwapNounCase).intensity &&
                  !sites.empty();
       ++k) {
    const size_t pick = rng.Uniform(sites.size());
    const SiteFinder::FeatureSite site = std::move(sites[pick]);
    sites.erase(sites.begin() + pick);

    const auto& alt = Pick(site.alternatives, rng);
    const std::string old_case(*site.analysis.feats.Get("case"));
    NoisyToken& noun = ed.s().tokens[site.token];
    if (noun.feats.Get("case")) noun.feats.Set("case", alt.value);
    ed.SetSurface(site.token, Pick(alt.forms, rng));

    if (!config_.np_wide_case) continue;
    for (size_t j = site.token; j-- > 0;) {
      NoisyToken& mod = ed.s().tokens[j];
      if (!InList(config_.tagset.modifier, mod.pos)) break;
      std::vector<std::string> forms;
      for (const Analysis& a : f.Analyses(mod)) {
        if (!a.feats.Has("case", old_case)) continue;
        forms = f.Reinflect(a, "case", alt.value, mod.surface);
        if (!forms.empty()) break;
      }
      if (forms.empty()) break;
      if (mod.feats.Get("case")) mod.feats.Set("case", alt.value);
      ed.SetSurface(j, Pick(forms, rng));
    }
  }
  return {true};
}

NoiseEngine::Attempt NoiseEngine::SwapMood(Editor& ed, Rng& rng) const {
  const SiteFinder f(config_, *resources_);
  auto sites = f.MoodSites(ed.s());
  if (sites.empty()) return {false};
  for (int k = 0;
       k < config_.op(NoiseOp::kSwapMood).intensity && !sites.empty(); ++k) {
    const size_t pick = rng.Uniform(sites.size());
    const SiteFinder::FeatureSite site = std::move(sites[pick]);
    sites.erase(sites.begin() + pick);
    const auto& alt = site.alternatives.front();
    NoisyToken& verb = ed.s().tokens[site.token];
    if (verb.feats.Get("mood")) verb.feats.Set("mood", alt.value);
    ed.SetSurface(site.token, Pick(alt.forms, rng));
  }
  return {true};
}

NoiseEngine::Attempt NoiseEngine::Dativitis(Editor& ed, Rng& rng) const {
  const SiteFinder f(config_, *resources_);
  auto sites = f.DativeSites(ed.s());
  if (sites.empty()) return {false};
  std::set<size_t> touched;
  for (int k = 0; k < config_.op(NoiseOp::kDativitis).intensity; ++k) {
    std::erase_if(sites, [&](const SiteFinder::DativeSite& site) {
      return touched.contains(site.verb) || touched.contains(site.subject.token);
    });
    if (sites.empty()) break;
    const SiteFinder::DativeSite site = Pick(sites, rng);
    const auto reinflect = [&](const SiteFinder::Reinflection& r) {
      NoisyToken& t = ed.s().tokens[r.token];
      if (t.feats.Get("case")) {
        t.feats.Set("case", ObliqueVerbLexicon::kTargetCase);
      }
      touched.insert(r.token);
      ed.SetSurface(r.token, Pick(r.forms, rng));
    };
    for (auto it = site.modifiers.rbegin(); it != site.modifiers.rend(); ++it) {
      reinflect(*it);
    }
    reinflect(site.subject);
    touched.insert(site.verb);
    NoisyToken& verb = ed.s().tokens[site.verb];
    if (site.entry->third_singular) {
      std::string form = MatchCapitalization(verb.surface, *site.entry->third_singular);
      if (form != verb.surface) {
        if (verb.feats.Get("person")) verb.feats.Set("person", "3");
        if (verb.feats.Get("num")) verb.feats.Set("num", "sg");
        ed.SetSurface(site.verb, std::move(form));
      }
    }
  }
  return {true};
}

NoiseEngine::Attempt NoiseEngine::SplitCompound(Editor& ed, Rng& rng) const {
  const SiteFinder f(config_, *resources_);
  auto sites = f.CompoundSites(ed.s());
  if (sites.empty()) return {false};
  for (int k = 0; k < config_.op(NoiseOp::kSplitCompound).intensity; ++k) {
    if (k > 0) sites = f.CompoundSites(ed.s());
    if (sites.empty()) break;
    const size_t i = Pick(sites, rng);
    NoisySentence& s = ed.s();
    const auto splits = resources_->inflection.ValidCompoundSplits(
        s.tokens[i].surface, config_.min_compound_part);
    const auto& [left, right] = Pick(splits, rng);
    NoisyToken head{right, "", "", FeatureSet(), ClassifySurface(right)};
    s.tokens[i].surface = left;
    s.tokens[i].kind = ClassifySurface(left);
    Untag(&s.tokens[i]);
    s.tokens.insert(s.tokens.begin() + i + 1, std::move(head));
    s.gaps.insert(s.gaps.begin() + i + 1, " ");
    ed.Commit(i);
  }
  return {true};
}

NoiseEngine::Attempt NoiseEngine::Misspelling(Editor& ed, Rng& rng) const {
  const SiteFinder f(config_, *resources_);
  auto sites = f.MisspellingSites(ed.s());
  if (sites.empty()) return {false};
  for (int k = 0;
       k < config_.op(NoiseOp::kMisspelling).intensity && !sites.empty(); ++k) {
    const size_t pick = rng.Uniform(sites.size());
    const size_t i = sites[pick];
    sites.erase(sites.begin() + pick);
    NoisyToken& t = ed.s().tokens[i];
    std::string variant = MatchCapitalization(t.surface, Pick(*f.Variants(t), rng));
    Untag(&t);
    t.kind = ClassifySurface(variant);
    ed.SetSurface(i, std::move(variant));
  }
  return {true};
}

// --- Word-level ops. --------------------------------------------------------

NoiseEngine::Attempt NoiseEngine::DeleteSpace(Editor& ed, Rng& rng) const {
  auto sites = SiteFinder::SpaceSites(ed.s());
  if (sites.empty()) return {false};
  for (int k = 0; k < config_.op(NoiseOp::kDeleteSpace).intensity; ++k) {
    if (k > 0) sites = SiteFinder::SpaceSites(ed.s());
    if (sites.empty()) break;
    const size_t i = Pick(sites, rng);
    NoisySentence& s = ed.s();
    s.tokens[i].surface += s.tokens[i + 1].surface;
    Untag(&s.tokens[i]);
    s.tokens.erase(s.tokens.begin() + i + 1);
    s.gaps.erase(s.gaps.begin() + i + 1);
    ed.Commit(i);
  }
  return {true};
}

// Each comma goes independently with comma_probability; intensity is unused.
NoiseEngine::Attempt NoiseEngine::DeleteCommas(Editor& ed, Rng& rng) const {
  const auto sites = SiteFinder::CommaSites(ed.s());
  if (sites.empty()) return {false};
  for (auto it = sites.rbegin(); it != sites.rend(); ++it) {
    if (!rng.Bernoulli(config_.comma_probability)) continue;
    const size_t i = *it;
    NoisySentence& s = ed.s();
    const bool inner = i > 0 && i + 1 < s.tokens.size();
    std::string merged = !s.gaps[i].empty() ? s.gaps[i] : s.gaps[i + 1];
    if (merged.empty() && inner) merged = " ";
    s.tokens.erase(s.tokens.begin() + i);
    s.gaps.erase(s.gaps.begin() + i + 1);
    s.gaps[i] = std::move(merged);
    ed.Commit(i);
  }
  return {true};
}

NoiseEngine::Attempt NoiseEngine::SwapWordOrder(Editor& ed, Rng& rng) const {
  auto sites = SiteFinder::SwapSites(ed.s());
  if (sites.empty()) return {false};
  std::set<size_t> touched;
  for (int k = 0; k < config_.op(NoiseOp::kSwapWordOrder).intensity; ++k) {
    if (k > 0) sites = SiteFinder::SwapSites(ed.s());
    std::erase_if(sites, [&](size_t i) {
      return touched.contains(i) || touched.contains(i + 1);
    });
    if (sites.empty()) break;
    const size_t i = Pick(sites, rng);
    std::swap(ed.s().tokens[i], ed.s().tokens[i + 1]);
    touched.insert(i);
    touched.insert(i + 1);
    ed.Commit(i);
  }
  return {true};
}

NoiseEngine::Attempt NoiseEngine::DuplicateWord(Editor& ed, Rng& rng) const {
  auto sites = SiteFinder::WordSites(ed.s());
  if (sites.empty()) return {false};
  for (int k = 0; k < config_.op(NoiseOp::kDuplicateWord).intensity; ++k) {
    if (k > 0) sites = SiteFinder::WordSites(ed.s());
    const size_t i = Pick(sites, rng);
    NoisySentence& s = ed.s();
    NoisyToken copy = s.tokens[i];
    s.tokens.insert(s.tokens.begin() + i + 1, std::move(copy));
    s.gaps.insert(s.gaps.begin() + i + 1, " ");
    ed.Commit(i + 1);
  }
  return {true};
}

// --- Character-level ops: one word, `intensity` characters in it. -----------

NoiseEngine::Attempt NoiseEngine::DuplicateChar(Editor& ed, Rng& rng) const {
  const auto sites = SiteFinder::WordSites(ed.s());
  if (sites.empty()) return {false};
  const size_t i = Pick(sites, rng);
  std::u32string word = DecodeUtf8(ed.s().tokens[i].surface);
  Untag(&ed.s().tokens[i]);
  for (int k = 0; k < config_.op(NoiseOp::kDuplicateChar).intensity; ++k) {
    const size_t p = rng.Uniform(word.size());
    word.insert(word.begin() + p, word[p]);
    ed.SetSurface(i, EncodeUtf8(word));
  }
  return {true};
}

NoiseEngine::Attempt NoiseEngine::DropChar(Editor& ed, Rng& rng) const {
  const auto sites = SiteFinder::WordSites(ed.s(), 2);
  if (sites.empty()) return {false};
  const size_t i = Pick(sites, rng);
  std::u32string word = DecodeUtf8(ed.s().tokens[i].surface);
  Untag(&ed.s().tokens[i]);
  for (int k = 0;
       k < config_.op(NoiseOp::kDropChar).intensity && word.size() >= 2; ++k) {
    word.erase(word.begin() + rng.Uniform(word.size()));
    ed.SetSurface(i, EncodeUtf8(word));
  }
  return {true};
}

// Picks up to `intensity` non-overlapping rule matches in one word and
// rewrites them right to left, so earlier byte offsets stay valid.
NoiseEngine::Attempt NoiseEngine::RewriteChars(Editor& ed, Rng& rng,
                                               const CharRuleTable& table) const {
  const auto sites = SiteFinder::RuleSites(ed.s(), table);
  if (sites.empty()) return {false};
  const size_t i = Pick(sites, rng);
  const NoiseOp op = &table == &resources_->accents ? NoiseOp::kToggleAccent
                                                    : NoiseOp::kRuleCharSwap;
  std::vector<CharSite> open = CharSites(ed.s().tokens[i].surface, table);
  std::vector<CharSite> chosen;
  for (int k = 0; k < config_.op(op).intensity && !open.empty(); ++k) {
    const CharSite site = open[rng.Uniform(open.size())];
    chosen.push_back(site);
    std::erase_if(open, [&](const CharSite& o) {
      return o.pos < site.pos + site.len && site.pos < o.pos + o.len;
    });
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const CharSite& a, const CharSite& b) { return a.pos > b.pos; });
  NoisyToken& t = ed.s().tokens[i];
  Untag(&t);
  for (const CharSite& site : chosen) {
    std::string word = t.surface;
    word.replace(site.pos, site.len, *site.to);
    ed.SetSurface(i, std::move(word));
  }
  return {true};
}

NoiseEngine::Attempt NoiseEngine::ReplaceRandomChar(Editor& ed, Rng& rng) const {
  const SiteFinder f(config_, *resources_);
  const auto sites = f.ReplaceSites(ed.s(), alphabet_);
  if (sites.empty()) return {false};
  const size_t i = Pick(sites, rng);
  std::u32string word = DecodeUtf8(ed.s().tokens[i].surface);
  Untag(&ed.s().tokens[i]);
  std::vector<size_t> positions;
  for (size_t p = 0; p < word.size(); ++p) {
    if (alphabet_.size() >= 2 || word[p] != alphabet_[0]) positions.push_back(p);
  }
  for (int k = 0; k < config_.op(NoiseOp::kReplaceRandomChar).intensity &&
                  !positions.empty();
       ++k) {
    const size_t pick = rng.Uniform(positions.size());
    const size_t p = positions[pick];
    positions.erase(positions.begin() + pick);
    std::u32string candidates;
    for (char32_t c : alphabet_) {
      if (c != word[p] && candidates.find(c) == std::u32string::npos) {
        candidates.push_back(c);
      }
    }
    word[p] = candidates[rng.Uniform(candidates.size())];
    ed.SetSurface(i, EncodeUtf8(word));
  }
  return {true};
}

// --- Composition. -----------------------------------------------------------

std::optional<ParallelPair> NoiseEngine::ComposeOnce(
    const NoisySentence& sentence, uint32_t suppressed, OpCounters* counters,
    NoiseOp* violator) const {
  ParallelPair pair;
  pair.id = sentence.id;
  Editor ed(sentence, &pair.edits);
  pair.target = ed.text();
  for (NoiseOp op : kApplicationOrder) {
    if (!config_.op(op).enabled) continue;
    const size_t idx = OpIndex(op);
    Rng rng = StreamFor(op, sentence.id);
    const bool attempt = rng.Bernoulli(config_.ApplicationProbability(op)) &&
                         (suppressed & (1u << idx)) == 0;
    const size_t before = pair.edits.size();
    bool had_site;
    if (attempt) {
      ed.set_op(op);
      had_site = Run(op, ed, rng).had_site;
    } else {
      had_site = HasSite(op, ed.s());
    }
    const size_t added = pair.edits.size() - before;
    counters->applicable[idx] += had_site ? 1 : 0;
    counters->applied[idx] += added > 0 ? 1 : 0;
    counters->records[idx] += added;
    if (added > 0 && !WithinLengthBounds(ed.text(), pair.target)) {
      *violator = op;
      return std::nullopt;
    }
  }
  pair.source = ed.text();
  pair.applied_ops = OpsInLog(pair.edits);
  return pair;
}

ParallelPair NoiseEngine::Compose(const NoisySentence& sentence,
                                  OpCounters* counters) const {
  uint32_t suppressed = 0;
  for (;;) {
    OpCounters local;
    NoiseOp violator{};
    std::optional<ParallelPair> pair =
        ComposeOnce(sentence, suppressed, &local, &violator);
    if (pair) {
      local.sentences = 1;
      local.changed = pair->source != pair->target ? 1 : 0;
      local.length_guard_reverts = std::popcount(suppressed);
      if (counters != nullptr) counters->Merge(local);
      return std::move(*pair);
    }
    suppressed |= 1u << OpIndex(violator);
  }
}

ParallelPair NoiseEngine::Compose(const TaggedSentence& sentence,
                                  OpCounters* counters) const {
  return Compose(NoisySentence::FromTagged(sentence), counters);
}

std::vector<ParallelPair> NoiseEngine::GenerateTypedTestset(
    const std::vector<TaggedSentence>& corpus, NoiseOp op, size_t n) const {
  std::vector<ParallelPair> out;
  out.reserve(n);
  for (const TaggedSentence& tagged : corpus) {
    if (out.size() == n) break;
    const NoisySentence s = NoisySentence::FromTagged(tagged);
    Rng rng = StreamFor(op, s.id);
    NoiseOutcome outcome = ApplyOp(op, s, rng);
    if (!outcome.changed) continue;
    ParallelPair pair;
    pair.id = s.id;
    pair.target = s.Text();
    pair.source = outcome.sentence.Text();
    if (!WithinLengthBounds(pair.source, pair.target)) continue;
    pair.edits = std::move(outcome.log);
    pair.applied_ops = {op};
    out.push_back(std::move(pair));
  }
  if (out.size() < n) {
    throw ExhaustionError("corpus exhausted: only " + std::to_string(out.size()) +
                          " of " + std::to_string(n) + " sentences admit op '" +
                          std::string(NoiseOpName(op)) + "'");
  }
  return out;
}

}  // namespace gecsynth
