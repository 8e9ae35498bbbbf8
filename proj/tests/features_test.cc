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

#include "gecsynth/features.h"

#include "gecsynth/errors.h"
#include "gtest/gtest.h"

namespace gecsynth {
namespace {

TEST(FeatureSetTest, ParsesAndSortsByKey) {
  const FeatureSet f = FeatureSet::Parse("num=sg|case=nom");
  EXPECT_EQ(f.ToString(), "case=nom|num=sg");
  EXPECT_EQ(f.Get("case"), "nom");
  EXPECT_FALSE(f.Get("mood").has_value());
  EXPECT_TRUE(f.Has("num", "sg"));
}

TEST(FeatureSetTest, UnderscoreIsEmpty) {
  EXPECT_TRUE(FeatureSet::Parse("_").empty());
  EXPECT_TRUE(FeatureSet::Parse("").empty());
  EXPECT_EQ(FeatureSet().ToString(), "_");
}

TEST(FeatureSetTest, RejectsMalformed) {
  EXPECT_THROW(FeatureSet::Parse("case"), FormatError);
  EXPECT_THROW(FeatureSet::Parse("=nom"), FormatError);
  EXPECT_THROW(FeatureSet::Parse("case=nom|case=dat"), FormatError);
}

TEST(FeatureSetTest, SubsetAndWith) {
  const FeatureSet small = FeatureSet::Parse("case=dat");
  const FeatureSet big = FeatureSet::Parse("case=dat|num=pl");
  EXPECT_TRUE(small.IsSubsetOf(big));
  EXPECT_FALSE(big.IsSubsetOf(small));
  EXPECT_TRUE(FeatureSet().IsSubsetOf(small));
  EXPECT_EQ(big.With("case", "gen").ToString(), "case=gen|num=pl");
  FeatureSet f = small;
  f.Set("mood", "ind");
  EXPECT_EQ(f.ToString(), "case=dat|mood=ind");
}

}  // namespace
}  // namespace gecsynth
