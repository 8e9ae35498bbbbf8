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

#include "gecsynth/gleu.h"

#include <algorithm>
#include <cmath>
#include <string_view>
#include <unordered_map>

#include "gecsynth/errors.h"
#include "gecsynth/rng.h"

namespace gecsynth {
namespace {

// N-grams keyed by their length-prefixed tokens, which cannot collide.
using FlatCounts = std::unordered_map<std::string, uint64_t>;

FlatCounts FlatNgrams(const TokenSeq& tokens, size_t n) {
  FlatCounts counts;
  if (tokens.size() < n) return counts;
  counts.reserve(tokens.size() - n + 1);
  std::string key;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    key.clear();
    for (size_t k = 0; k < n; ++k) {
      key += std::to_string(tokens[i + k].size());
      key.push_back(':');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

uint64_t CountOf(const FlatCounts& counts, const std::string& key) {
  const auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

double Mean(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

}  // namespace

std::map<Ngram, size_t> NgramCounts(const TokenSeq& tokens, size_t n) {
  if (n == 0) throw ArgumentError("n-gram order must be at least 1");
  std::map<Ngram, size_t> counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[Ngram(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return counts;
}

void GleuStats::Add(const GleuStats& other) {
  if (orders.size() < other.orders.size()) orders.resize(other.orders.size());
  for (size_t n = 0; n < other.orders.size(); ++n) {
    orders[n].matched += other.orders[n].matched;
    orders[n].penalized += other.orders[n].penalized;
    orders[n].credited += other.orders[n].credited;
    orders[n].hyp_total += other.orders[n].hyp_total;
    orders[n].ref_total += other.orders[n].ref_total;
  }
  hyp_len += other.hyp_len;
  ref_len += other.ref_len;
  sentences += other.sentences;
}

GleuStats SentenceStats(const TokenSeq& source, const TokenSeq& reference,
                        const TokenSeq& hypothesis, size_t max_n) {
  if (max_n == 0) throw ArgumentError("max_n must be at least 1");
  if (reference.empty()) throw ArgumentError("empty reference");
  GleuStats stats;
  stats.orders.resize(max_n);
  stats.hyp_len = hypothesis.size();
  stats.ref_len = reference.size();
  stats.sentences = 1;
  for (size_t n = 1; n <= max_n; ++n) {
    const FlatCounts h = FlatNgrams(hypothesis, n);
    const FlatCounts r = FlatNgrams(reference, n);
    const FlatCounts s = FlatNgrams(source, n);
    OrderCounts& o = stats.orders[n - 1];
    for (const auto& [gram, hc] : h) {
      const uint64_t rc = CountOf(r, gram);
      const uint64_t sc = CountOf(s, gram);
      o.matched += std::min(hc, rc);
      const uint64_t kept = std::min(hc, sc);
      o.penalized += kept > rc ? kept - rc : 0;
    }
    o.credited = o.matched > o.penalized ? o.matched - o.penalized : 0;
    o.hyp_total = hypothesis.size() >= n ? hypothesis.size() - n + 1 : 0;
    o.ref_total = reference.size() >= n ? reference.size() - n + 1 : 0;
  }
  return stats;
}

GleuReport ReportFromStats(const GleuStats& stats) {
  GleuReport report;
  report.counts = stats.orders;
  report.hyp_len = stats.hyp_len;
  report.ref_len = stats.ref_len;
  report.sentences = stats.sentences;
  double log_sum = 0.0;
  for (const OrderCounts& o : stats.orders) {
    double p;
    if (o.hyp_total == 0 && o.ref_total == 0) {
      p = 1.0;
    } else if (o.hyp_total == 0 || o.credited == 0) {
      p = kGleuEpsilon;
    } else {
      p = static_cast<double>(o.credited) / static_cast<double>(o.hyp_total);
    }
    report.per_n_precision.push_back(p);
    log_sum += std::log(p);
  }
  if (stats.hyp_len == 0) {
    report.empty_hypothesis = true;
    report.brevity_penalty = 0.0;
    report.score = 0.0;
    return report;
  }
  report.brevity_penalty =
      stats.hyp_len >= stats.ref_len
          ? 1.0
          : std::exp(1.0 - static_cast<double>(stats.ref_len) /
                               static_cast<double>(stats.hyp_len));
  const double mean_log = log_sum / static_cast<double>(stats.orders.size());
  report.score = 100.0 * report.brevity_penalty * std::exp(mean_log);
  report.score = std::clamp(report.score, 0.0, 100.0);
  return report;
}

GleuReport GleuSentence(const TokenSeq& source, const TokenSeq& reference,
                        const TokenSeq& hypothesis, size_t max_n) {
  return ReportFromStats(SentenceStats(source, reference, hypothesis, max_n));
}

GleuReport GleuCorpus(const std::vector<GleuTriple>& triples, size_t max_n,
                      GleuAveraging averaging) {
  if (triples.empty()) throw ArgumentError("empty corpus");
  if (averaging == GleuAveraging::kMicro) {
    GleuStats total;
    total.orders.resize(max_n);
    for (const GleuTriple& t : triples) {
      total.Add(SentenceStats(t.source, t.reference, t.hypothesis, max_n));
    }
    return ReportFromStats(total);
  }
  GleuStats total;
  total.orders.resize(max_n);
  std::vector<double> scores, bps;
  std::vector<std::vector<double>> precisions(max_n);
  bool any_empty = false;
  for (const GleuTriple& t : triples) {
    const GleuStats s = SentenceStats(t.source, t.reference, t.hypothesis, max_n);
    total.Add(s);
    const GleuReport r = ReportFromStats(s);
    scores.push_back(r.score);
    bps.push_back(r.brevity_penalty);
    for (size_t n = 0; n < max_n; ++n) precisions[n].push_back(r.per_n_precision[n]);
    any_empty = any_empty || r.empty_hypothesis;
  }
  GleuReport report = ReportFromStats(total);
  report.score = Mean(scores);
  report.brevity_penalty = Mean(bps);
  for (size_t n = 0; n < max_n; ++n) report.per_n_precision[n] = Mean(precisions[n]);
  report.empty_hypothesis = any_empty;
  return report;
}

double GleuMultiref(const std::vector<TokenSeq>& sources,
                    const std::vector<std::vector<TokenSeq>>& references,
                    const std::vector<TokenSeq>& hypotheses, size_t iterations,
                    uint64_t seed, size_t max_n, GleuAveraging averaging) {
  if (sources.size() != references.size() || sources.size() != hypotheses.size()) {
    throw ArgumentError("sources, references and hypotheses differ in length");
  }
  std::vector<std::vector<TokenSeq>> refs = references;
  bool single = true;
  for (auto& list : refs) {
    if (list.empty()) throw ArgumentError("sentence without references");
    std::vector<TokenSeq> unique;
    for (TokenSeq& r : list) {
      if (std::find(unique.begin(), unique.end(), r) == unique.end()) {
        unique.push_back(std::move(r));
      }
    }
    list = std::move(unique);
    single = single && list.size() == 1;
  }
  std::vector<GleuTriple> triples(sources.size());
  for (size_t i = 0; i < sources.size(); ++i) {
    triples[i].source = sources[i];
    triples[i].hypothesis = hypotheses[i];
  }
  if (single) {
    for (size_t i = 0; i < refs.size(); ++i) triples[i].reference = refs[i][0];
    return GleuCorpus(triples, max_n, averaging).score;
  }
  if (iterations == 0) throw ArgumentError("iterations must be at least 1");
  double sum = 0.0;
  for (size_t it = 0; it < iterations; ++it) {
    Rng rng(DeriveSeed(seed, "gleu-multiref", std::to_string(it)));
    for (size_t i = 0; i < refs.size(); ++i) {
      triples[i].reference = refs[i][rng.Uniform(refs[i].size())];
    }
    sum += GleuCorpus(triples, max_n, averaging).score;
  }
  return sum / static_cast<double>(iterations);
}

}  // namespace gecsynth
