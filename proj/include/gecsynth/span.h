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

// Span-based edit extraction and F0.5 scoring without error types.
//
// Tokens are aligned by a weighted Damerau-Levenshtein distance. Costs are
// kept as integers in half units:
//
//   match 0, case-only substitution 1, substitution 2, insertion 2,
//   deletion 2, adjacent transposition 2.
//
// Among minimal alignments the backtrace, walking from the end, takes the
// first optimal move in the order transposition, substitution, deletion,
// insertion, match. That pushes edits as far right as the cost allows.
// Consecutive non-match moves form one span.

#ifndef GECSYNTH_SPAN_H_
#define GECSYNTH_SPAN_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gecsynth {

using TokenList = std::vector<std::string>;

// Replace source tokens [start, end) with `replacement`. start == end is an
// insertion, an empty replacement a deletion.
struct EditSpan {
  size_t start = 0;
  size_t end = 0;
  TokenList replacement;

  friend bool operator==(const EditSpan&, const EditSpan&) = default;
  friend auto operator<=>(const EditSpan&, const EditSpan&) = default;
};

enum class AlignOp { kMatch, kSubstitute, kInsert, kDelete, kTranspose };

struct Alignment {
  std::vector<AlignOp> ops;  // left to right
  int64_t cost = 0;          // half units
};

inline constexpr int64_t kMatchCost = 0;
inline constexpr int64_t kCaseSubstituteCost = 1;
inline constexpr int64_t kSubstituteCost = 2;
inline constexpr int64_t kInsertCost = 2;
inline constexpr int64_t kDeleteCost = 2;
inline constexpr int64_t kTransposeCost = 2;

Alignment AlignTokens(const TokenList& source, const TokenList& target);

// Cost of one substitution of `a` by `b`: 0, 1 or 2.
int64_t SubstitutionCost(const std::string& a, const std::string& b);

// Merges the non-match runs of an alignment into spans.
std::vector<EditSpan> SpansFromAlignment(const TokenList& source,
                                         const TokenList& target,
                                         const Alignment& alignment);

std::vector<EditSpan> ExtractEdits(const TokenList& source,
                                   const TokenList& target);

// Throws ArgumentError if the spans are out of range or overlap.
TokenList ApplyEdits(const TokenList& source, const std::vector<EditSpan>& edits);

// Sorts by (start, end) and throws ArgumentError when two spans overlap or
// two insertions share a position.
std::vector<EditSpan> NormalizeSpans(std::vector<EditSpan> spans);

struct SpanScore {
  uint64_t tp = 0;
  uint64_t fp = 0;
  uint64_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f05 = 0.0;

  // Recomputes precision, recall and f05 from the counts.
  void Finalize();
};

// Correction-level matching: a hypothesis edit counts only if gold has the
// same (start, end, replacement).
SpanScore ScoreSpans(const std::vector<EditSpan>& gold,
                     const std::vector<EditSpan>& hyp);

struct SpanEntry {
  TokenList source;
  std::vector<EditSpan> gold;
  TokenList hypothesis;
};

// Hypothesis edits come from ExtractEdits(source, hypothesis); counts are
// summed over the corpus before P, R and F0.5 are computed.
SpanScore ScoreCorpusSpans(const std::vector<SpanEntry>& entries);

}  // namespace gecsynth

#endif  // GECSYNTH_SPAN_H_
