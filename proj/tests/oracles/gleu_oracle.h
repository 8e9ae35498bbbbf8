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

// Brute-force GLEU used as a test oracle. N-grams are compared as token
// vectors by linear scan; nothing is shared with the library beyond the
// final formula, which has to be evaluated in the same order for results to
// agree to the last bit.

#ifndef GECSYNTH_TESTS_ORACLES_GLEU_ORACLE_H_
#define GECSYNTH_TESTS_ORACLES_GLEU_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace gecsynth::oracle {

using Seq = std::vector<std::string>;

struct OracleOrder {
  uint64_t matched = 0;
  uint64_t penalized = 0;
  uint64_t credited = 0;
  uint64_t hyp_total = 0;
  uint64_t ref_total = 0;
};

inline std::vector<Seq> AllNgrams(const Seq& tokens, size_t n) {
  std::vector<Seq> out;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    out.emplace_back(tokens.begin() + i, tokens.begin() + i + n);
  }
  return out;
}

inline uint64_t Occurrences(const std::vector<Seq>& grams, const Seq& g) {
  return static_cast<uint64_t>(std::count(grams.begin(), grams.end(), g));
}

// Per-order counts for one sentence.
inline std::vector<OracleOrder> SentenceCounts(const Seq& src, const Seq& ref,
                                               const Seq& hyp, size_t max_n) {
  std::vector<OracleOrder> out(max_n);
  for (size_t n = 1; n <= max_n; ++n) {
    const auto h = AllNgrams(hyp, n);
    const auto r = AllNgrams(ref, n);
    const auto s = AllNgrams(src, n);
    std::vector<Seq> distinct;
    for (const Seq& g : h) {
      if (std::find(distinct.begin(), distinct.end(), g) == distinct.end()) {
        distinct.push_back(g);
      }
    }
    OracleOrder& o = out[n - 1];
    for (const Seq& g : distinct) {
      const uint64_t hc = Occurrences(h, g);
      const uint64_t rc = Occurrences(r, g);
      const uint64_t sc = Occurrences(s, g);
      o.matched += std::min(hc, rc);
      const uint64_t in_source = std::min(hc, sc);
      if (in_source > rc) o.penalized += in_source - rc;
    }
    o.credited = o.matched > o.penalized ? o.matched - o.penalized : 0;
    o.hyp_total = h.size();
    o.ref_total = r.size();
  }
  return out;
}

struct Triple {
  Seq src, ref, hyp;
};

// Corpus score with counts summed first.
inline double CorpusScore(const std::vector<Triple>& triples, size_t max_n = 4) {
  std::vector<OracleOrder> total(max_n);
  uint64_t c = 0, r = 0;
  for (const Triple& t : triples) {
    const auto counts = SentenceCounts(t.src, t.ref, t.hyp, max_n);
    for (size_t n = 0; n < max_n; ++n) {
      total[n].credited += counts[n].credited;
      total[n].hyp_total += counts[n].hyp_total;
      total[n].ref_total += counts[n].ref_total;
    }
    c += t.hyp.size();
    r += t.ref.size();
  }
  double log_sum = 0.0;
  for (const OracleOrder& o : total) {
    double p;
    if (o.hyp_total == 0 && o.ref_total == 0) {
      p = 1.0;
    } else if (o.credited == 0) {
      p = 1e-9;
    } else {
      p = static_cast<double>(o.credited) / static_cast<double>(o.hyp_total);
    }
    log_sum += std::log(p);
  }
  if (c == 0) return 0.0;
  const double bp = c >= r ? 1.0
                           : std::exp(1.0 - static_cast<double>(r) /
                                                static_cast<double>(c));
  const double score = 100.0 * bp * std::exp(log_sum / static_cast<double>(max_n));
  return std::clamp(score, 0.0, 100.0);
}

}  // namespace gecsynth::oracle

#endif  // GECSYNTH_TESTS_ORACLES_GLEU_ORACLE_H_
