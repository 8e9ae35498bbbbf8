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

#include "gecsynth/split.h"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "gecsynth/errors.h"
#include "gecsynth/rng.h"

namespace gecsynth {

SplitPlan PlanSplit(size_t corpus_size, size_t n_valid, size_t n_test,
                    uint64_t seed) {
  const size_t held_out = n_valid + n_test;
  if (held_out > corpus_size) {
    throw ArgumentError("corpus of " + std::to_string(corpus_size) +
                        " items is too small for " + std::to_string(n_valid) +
                        " validation and " + std::to_string(n_test) +
                        " test items");
  }
  Rng rng(DeriveSeed(seed, "split", std::to_string(corpus_size)));

  // Floyd: a uniform k-subset in k draws.
  std::vector<size_t> chosen;
  chosen.reserve(held_out);
  std::unordered_set<size_t> seen;
  seen.reserve(held_out * 2);
  for (size_t j = corpus_size - held_out; j < corpus_size; ++j) {
    const size_t t = rng.Uniform(j + 1);
    const size_t pick = seen.contains(t) ? j : t;
    seen.insert(pick);
    chosen.push_back(pick);
  }
  // Floyd's output order is biased; shuffle before dealing.
  for (size_t i = chosen.size(); i > 1; --i) {
    std::swap(chosen[i - 1], chosen[rng.Uniform(i)]);
  }

  SplitPlan plan;
  plan.corpus_size = corpus_size;
  plan.valid.assign(chosen.begin(), chosen.begin() + n_valid);
  plan.test.assign(chosen.begin() + n_valid, chosen.end());
  std::sort(plan.valid.begin(), plan.valid.end());
  std::sort(plan.test.begin(), plan.test.end());
  return plan;
}

}  // namespace gecsynth
