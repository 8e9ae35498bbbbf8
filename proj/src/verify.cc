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

#include "gecsynth/verify.h"

#include <algorithm>

#include "gecsynth/errors.h"
#include "gecsynth/span.h"

namespace gecsynth {
namespace {

// Closed-interval test, so a deletion point touching a token still counts.
bool Meets(const ByteRange& a, const ByteRange& b) {
  return a.begin <= b.end && b.begin <= a.end;
}

}  // namespace

std::vector<ByteRange> TouchedRanges(const EditLog& log) {
  std::vector<ByteRange> ranges;
  for (const EditRecord& r : log) {
    const size_t o = r.offset;
    const size_t b = r.before.size();
    const size_t a = r.after.size();
    ByteRange merged{o, o + a};
    std::vector<ByteRange> next;
    for (const ByteRange& x : ranges) {
      if (x.end < o) {
        next.push_back(x);
      } else if (x.begin > o + b) {
        next.push_back({x.begin - b + a, x.end - b + a});
      } else {
        // Overlaps the rewritten bytes: fold into the new range.
        merged.begin = std::min(merged.begin, x.begin);
        merged.end = std::max(merged.end, x.end <= o + b ? o + a : x.end - b + a);
      }
    }
    next.push_back(merged);
    std::sort(next.begin(), next.end(), [](const ByteRange& p, const ByteRange& q) {
      return p.begin != q.begin ? p.begin < q.begin : p.end < q.end;
    });
    ranges = std::move(next);
  }
  return ranges;
}

VerifyResult VerifyOpIsolation(const ParallelPair& pair, NoiseOp op,
                               const Tokenizer& tokenizer) {
  const auto fail = [&](std::string why) {
    return VerifyResult{false, pair.id + ": " + why};
  };
  if (pair.edits.empty()) return fail("empty edit log");
  for (const EditRecord& r : pair.edits) {
    if (r.op != op) {
      return fail("record of op " + std::string(NoiseOpName(r.op)) +
                  " in a " + std::string(NoiseOpName(op)) + " pair");
    }
  }
  try {
    if (ReplayForward(pair.target, pair.edits) != pair.source) {
      return fail("replaying the log does not give the source");
    }
    if (Invert(pair) != pair.target) return fail("inversion does not give the target");
  } catch (const IntegrityError& e) {
    return fail(e.what());
  }

  const TokenizedText src = tokenizer.Tokenize(pair.source);
  const TokenizedText tgt = tokenizer.Tokenize(pair.target);
  const std::vector<EditSpan> spans = ExtractEdits(src.Surfaces(), tgt.Surfaces());
  if (spans.empty() && pair.source != pair.target) {
    // Whitespace-only change: no token edit to explain.
    return {};
  }
  const std::vector<ByteRange> touched = TouchedRanges(pair.edits);
  for (const EditSpan& s : spans) {
    ByteRange range;
    if (s.start < s.end) {
      range = {src.tokens[s.start].start, src.tokens[s.end - 1].end};
    } else {
      range.begin = s.start == 0 ? 0 : src.tokens[s.start - 1].end;
      range.end = s.start < src.tokens.size() ? src.tokens[s.start].start
                                              : pair.source.size();
    }
    const bool explained = std::any_of(touched.begin(), touched.end(),
                                       [&](const ByteRange& t) { return Meets(t, range); });
    if (!explained) {
      return fail("edit at tokens " + std::to_string(s.start) + "-" +
                  std::to_string(s.end) + " is not covered by the log");
    }
  }
  return {};
}

}  // namespace gecsynth
