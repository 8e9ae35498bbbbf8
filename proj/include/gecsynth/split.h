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

#ifndef GECSYNTH_SPLIT_H_
#define GECSYNTH_SPLIT_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gecsynth {

inline constexpr size_t kDefaultValidSize = 2000;
inline constexpr size_t kDefaultTestSize = 4000;

// Held-out indices chosen for a corpus of `corpus_size` items. Indices in each
// list are ascending; everything else is training data.
struct SplitPlan {
  size_t corpus_size = 0;
  std::vector<size_t> valid;
  std::vector<size_t> test;

  size_t train_size() const { return corpus_size - valid.size() - test.size(); }
};

// Samples n_valid + n_test distinct indices (Floyd's algorithm, so the cost
// does not grow with the corpus) and deals them to valid and test. A pure
// function of its arguments. Throws ArgumentError when the corpus is smaller
// than n_valid + n_test.
SplitPlan PlanSplit(size_t corpus_size, size_t n_valid, size_t n_test,
                    uint64_t seed);

template <typename T>
struct CorpusSplit {
  std::vector<T> train;
  std::vector<T> valid;
  std::vector<T> test;
};

// Partitions `items` per PlanSplit, keeping corpus order inside each part.
template <typename T>
CorpusSplit<T> SplitCorpus(const std::vector<T>& items, size_t n_valid,
                           size_t n_test, uint64_t seed) {
  const SplitPlan plan = PlanSplit(items.size(), n_valid, n_test, seed);
  CorpusSplit<T> out;
  out.train.reserve(plan.train_size());
  size_t v = 0;
  size_t t = 0;
  for (size_t i = 0; i < items.size(); ++i) {
    if (v < plan.valid.size() && plan.valid[v] == i) {
      out.valid.push_back(items[i]);
      ++v;
    } else if (t < plan.test.size() && plan.test[t] == i) {
      out.test.push_back(items[i]);
      ++t;
    } else {
      out.train.push_back(items[i]);
    }
  }
  return out;
}

}  // namespace gecsynth

#endif  // GECSYNTH_SPLIT_H_
