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

#include "gecsynth/span.h"

#include <algorithm>
#include <limits>
#include <set>

#include "gecsynth/errors.h"
#include "gecsynth/text.h"

namespace gecsynth {

int64_t SubstitutionCost(const std::string& a, const std::string& b) {
  if (a == b) return kMatchCost;
  if (ToLowerString(a) == ToLowerString(b)) return kCaseSubstituteCost;
  return kSubstituteCost;
}

Alignment AlignTokens(const TokenList& source, const TokenList& target) {
  const size_t n = source.size();
  const size_t m = target.size();
  std::vector<std::string> ls(n), lt(m);
  for (size_t i = 0; i < n; ++i) ls[i] = ToLowerString(source[i]);
  for (size_t j = 0; j < m; ++j) lt[j] = ToLowerString(target[j]);
  const auto sub = [&](size_t i, size_t j) -> int64_t {
    if (source[i] == target[j]) return kMatchCost;
    return ls[i] == lt[j] ? kCaseSubstituteCost : kSubstituteCost;
  };
  const auto can_transpose = [&](size_t i, size_t j) {
    return i >= 2 && j >= 2 && source[i - 2] == target[j - 1] &&
           source[i - 1] == target[j - 2] && source[i - 2] != source[i - 1];
  };

  // d[i][j]: cost of aligning source[0, i) with target[0, j).
  std::vector<int64_t> d((n + 1) * (m + 1));
  const auto at = [&](size_t i, size_t j) -> int64_t& { return d[i * (m + 1) + j]; };
  for (size_t i = 0; i <= n; ++i) {
    for (size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) {
        at(i, j) = 0;
        continue;
      }
      int64_t best = std::numeric_limits<int64_t>::max();
      if (i > 0) best = std::min(best, at(i - 1, j) + kDeleteCost);
      if (j > 0) best = std::min(best, at(i, j - 1) + kInsertCost);
      if (i > 0 && j > 0) best = std::min(best, at(i - 1, j - 1) + sub(i - 1, j - 1));
      if (can_transpose(i, j)) best = std::min(best, at(i - 2, j - 2) + kTransposeCost);
      at(i, j) = best;
    }
  }

  Alignment alignment;
  alignment.cost = at(n, m);
  size_t i = n;
  size_t j = m;
  while (i > 0 || j > 0) {
    const int64_t here = at(i, j);
    if (can_transpose(i, j) && at(i - 2, j - 2) + kTransposeCost == here) {
      alignment.ops.push_back(AlignOp::kTranspose);
      i -= 2;
      j -= 2;
    } else if (i > 0 && j > 0 && sub(i - 1, j - 1) != kMatchCost &&
               at(i - 1, j - 1) + sub(i - 1, j - 1) == here) {
      alignment.ops.push_back(AlignOp::kSubstitute);
      --i;
      --j;
    } else if (i > 0 && at(i - 1, j) + kDeleteCost == here) {
      alignment.ops.push_back(AlignOp::kDelete);
      --i;
    } else if (j > 0 && at(i, j - 1) + kInsertCost == here) {
      alignment.ops.push_back(AlignOp::kInsert);
      --j;
    } else {
      alignment.ops.push_back(AlignOp::kMatch);
      --i;
      --j;
    }
  }
  std::reverse(alignment.ops.begin(), alignment.ops.end());
  return alignment;
}

std::vector<EditSpan> SpansFromAlignment(const TokenList& /*source*/,
                                         const TokenList& target,
                                         const Alignment& alignment) {
  std::vector<EditSpan> spans;
  size_t i = 0;
  size_t j = 0;
  bool open = false;
  for (AlignOp op : alignment.ops) {
    if (op == AlignOp::kMatch) {
      open = false;
      ++i;
      ++j;
      continue;
    }
    if (!open) {
      spans.push_back({i, i, {}});
      open = true;
    }
    EditSpan& span = spans.back();
    switch (op) {
      case AlignOp::kSubstitute:
        span.replacement.push_back(target[j++]);
        ++i;
        break;
      case AlignOp::kInsert:
        span.replacement.push_back(target[j++]);
        break;
      case AlignOp::kDelete:
        ++i;
        break;
      case AlignOp::kTranspose:
        span.replacement.push_back(target[j++]);
        span.replacement.push_back(target[j++]);
        i += 2;
        break;
      case AlignOp::kMatch:
        break;
    }
    span.end = i;
  }
  return spans;
}

std::vector<EditSpan> ExtractEdits(const TokenList& source,
                                   const TokenList& target) {
  if (source == target) return {};
  return SpansFromAlignment(source, target, AlignTokens(source, target));
}

std::vector<EditSpan> NormalizeSpans(std::vector<EditSpan> spans) {
  std::sort(spans.begin(), spans.end(), [](const EditSpan& a, const EditSpan& b) {
    return a.start != b.start ? a.start < b.start : a.end < b.end;
  });
  for (const EditSpan& s : spans) {
    if (s.end < s.start) {
      throw ArgumentError("edit span ends before it starts: " +
                          std::to_string(s.start) + " " + std::to_string(s.end));
    }
  }
  for (size_t k = 1; k < spans.size(); ++k) {
    const EditSpan& a = spans[k - 1];
    const EditSpan& b = spans[k];
    const bool both_insert = a.start == a.end && b.start == b.end && a.start == b.start;
    if (b.start < a.end || both_insert) {
      throw ArgumentError("overlapping edit spans at " + std::to_string(a.start) +
                          "-" + std::to_string(a.end) + " and " +
                          std::to_string(b.start) + "-" + std::to_string(b.end));
    }
  }
  return spans;
}

TokenList ApplyEdits(const TokenList& source, const std::vector<EditSpan>& edits) {
  const std::vector<EditSpan> spans = NormalizeSpans(edits);
  TokenList out;
  size_t i = 0;
  for (const EditSpan& s : spans) {
    if (s.end > source.size()) {
      throw ArgumentError("edit span " + std::to_string(s.start) + "-" +
                          std::to_string(s.end) + " exceeds source length " +
                          std::to_string(source.size()));
    }
    out.insert(out.end(), source.begin() + i, source.begin() + s.start);
    out.insert(out.end(), s.replacement.begin(), s.replacement.end());
    i = s.end;
  }
  out.insert(out.end(), source.begin() + i, source.end());
  return out;
}

void SpanScore::Finalize() {
  if (tp + fp == 0) {
    precision = fn == 0 ? 1.0 : 0.0;
  } else {
    precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  }
  if (tp + fn == 0) {
    recall = fp == 0 ? 1.0 : 0.0;
  } else {
    recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  }
  f05 = precision == 0.0 && recall == 0.0
            ? 0.0
            : 1.25 * precision * recall / (0.25 * precision + recall);
}

SpanScore ScoreSpans(const std::vector<EditSpan>& gold,
                     const std::vector<EditSpan>& hyp) {
  const std::vector<EditSpan> g = NormalizeSpans(gold);
  const std::vector<EditSpan> h = NormalizeSpans(hyp);
  const std::set<EditSpan> gold_set(g.begin(), g.end());
  SpanScore score;
  for (const EditSpan& e : h) {
    if (gold_set.contains(e)) ++score.tp;
  }
  score.fp = h.size() - score.tp;
  score.fn = g.size() - score.tp;
  score.Finalize();
  return score;
}

SpanScore ScoreCorpusSpans(const std::vector<SpanEntry>& entries) {
  SpanScore total;
  for (const SpanEntry& e : entries) {
    const SpanScore s = ScoreSpans(e.gold, ExtractEdits(e.source, e.hypothesis));
    total.tp += s.tp;
    total.fp += s.fp;
    total.fn += s.fn;
  }
  total.Finalize();
  return total;
}

}  // namespace gecsynth
