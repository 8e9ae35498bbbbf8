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

// GLEU for correction output, scored against both the source S and a
// reference R. For each order n and each sentence:
//
//   matched   = sum_g min(H(g), R(g))
//   penalized = sum_g max(0, min(H(g), S(g)) - R(g))
//   credited  = max(0, matched - penalized)
//
// Corpus precision p_n = sum(credited) / sum(|H| - n + 1). An order with no
// n-grams in either H or R says nothing about the hypothesis and has p_n = 1;
// otherwise a zero p_n is floored at kGleuEpsilon. With the BLEU brevity
// penalty BP:
//
//   score = 100 * BP * exp(mean_n ln p_n)

#ifndef GECSYNTH_GLEU_H_
#define GECSYNTH_GLEU_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gecsynth {

using Ngram = std::vector<std::string>;
using TokenSeq = std::vector<std::string>;

inline constexpr double kGleuEpsilon = 1e-9;
inline constexpr size_t kGleuMaxN = 4;

// Count of every contiguous n-gram. Throws ArgumentError when n == 0.
std::map<Ngram, size_t> NgramCounts(const TokenSeq& tokens, size_t n);

struct OrderCounts {
  uint64_t matched = 0;
  uint64_t penalized = 0;
  uint64_t credited = 0;    // sum of per-sentence max(0, matched - penalized)
  uint64_t hyp_total = 0;   // n-grams in H
  uint64_t ref_total = 0;   // n-grams in R

  friend bool operator==(const OrderCounts&, const OrderCounts&) = default;
};

// Additive sufficient statistics; summing them is the corpus fold.
struct GleuStats {
  std::vector<OrderCounts> orders;  // index n - 1
  uint64_t hyp_len = 0;
  uint64_t ref_len = 0;
  uint64_t sentences = 0;

  void Add(const GleuStats& other);
  friend bool operator==(const GleuStats&, const GleuStats&) = default;
};

struct GleuReport {
  std::vector<double> per_n_precision;
  double brevity_penalty = 1.0;
  double score = 0.0;
  std::vector<OrderCounts> counts;
  uint64_t hyp_len = 0;
  uint64_t ref_len = 0;
  uint64_t sentences = 0;
  bool empty_hypothesis = false;  // no hypothesis tokens at all; score 0
};

enum class GleuAveraging { kMicro, kMacro };

struct GleuTriple {
  TokenSeq source;
  TokenSeq reference;
  TokenSeq hypothesis;
};

// Throws ArgumentError on an empty reference or max_n == 0.
GleuStats SentenceStats(const TokenSeq& source, const TokenSeq& reference,
                        const TokenSeq& hypothesis, size_t max_n = kGleuMaxN);

GleuReport ReportFromStats(const GleuStats& stats);

GleuReport GleuSentence(const TokenSeq& source, const TokenSeq& reference,
                        const TokenSeq& hypothesis, size_t max_n = kGleuMaxN);

// Micro: counts summed over the corpus first. Macro: the mean of sentence
// scores (precisions and BP are averaged likewise). Throws ArgumentError on
// an empty corpus.
GleuReport GleuCorpus(const std::vector<GleuTriple>& triples,
                      size_t max_n = kGleuMaxN,
                      GleuAveraging averaging = GleuAveraging::kMicro);

// Mean corpus score over `iterations` draws of one reference per sentence.
// references[i] lists the references of sentence i; duplicates are dropped
// first, and when every sentence is left with one reference the result is
// the plain corpus score. Throws ArgumentError when a sentence has none.
double GleuMultiref(const std::vector<TokenSeq>& sources,
                    const std::vector<std::vector<TokenSeq>>& references,
                    const std::vector<TokenSeq>& hypotheses, size_t iterations,
                    uint64_t seed, size_t max_n = kGleuMaxN,
                    GleuAveraging averaging = GleuAveraging::kMicro);

}  // namespace gecsynth

#endif  // GECSYNTH_GLEU_H_
