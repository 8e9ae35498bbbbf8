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

#include <numeric>
#include <set>

#include "gecsynth/errors.h"
#include "gtest/gtest.h"

namespace gecsynth {
namespace {

TEST(SplitTest, SizesAndDisjointness) {
  std::vector<int> items(10);
  std::iota(items.begin(), items.end(), 0);
  const auto split = SplitCorpus(items, 2, 3, 42);
  EXPECT_EQ(split.train.size(), 5u);
  EXPECT_EQ(split.valid.size(), 2u);
  EXPECT_EQ(split.test.size(), 3u);
  std::multiset<int> all(split.train.begin(), split.train.end());
  all.insert(split.valid.begin(), split.valid.end());
  all.insert(split.test.begin(), split.test.end());
  EXPECT_EQ(all, std::multiset<int>(items.begin(), items.end()));
  EXPECT_TRUE(std::is_sorted(split.train.begin(), split.train.end()));
}

TEST(SplitTest, SameSeedSamePartition) {
  std::vector<int> items(1000);
  std::iota(items.begin(), items.end(), 0);
  const auto a = SplitCorpus(items, 20, 40, 9);
  const auto b = SplitCorpus(items, 20, 40, 9);
  EXPECT_EQ(a.valid, b.valid);
  EXPECT_EQ(a.test, b.test);
  EXPECT_EQ(a.train, b.train);
  const auto c = SplitCorpus(items, 20, 40, 10);
  EXPECT_NE(a.valid, c.valid);
}

TEST(SplitTest, DefaultSizesAtFullScale) {
  const SplitPlan plan = PlanSplit(35'000'000, kDefaultValidSize, kDefaultTestSize, 1);
  EXPECT_EQ(plan.train_size(), 34'994'000u);
  EXPECT_EQ(plan.valid.size(), 2000u);
  EXPECT_EQ(plan.test.size(), 4000u);
  std::set<size_t> held(plan.valid.begin(), plan.valid.end());
  held.insert(plan.test.begin(), plan.test.end());
  EXPECT_EQ(held.size(), 6000u);
  EXPECT_LT(*held.rbegin(), 35'000'000u);
}

TEST(SplitTest, CorpusTooSmall) {
  EXPECT_THROW(PlanSplit(4, 2, 3, 0), ArgumentError);
  EXPECT_NO_THROW(PlanSplit(5, 2, 3, 0));
}

}  // namespace
}  // namespace gecsynth
