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

#ifndef GECSYNTH_FEATURES_H_
#define GECSYNTH_FEATURES_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gecsynth {

// Morphological features such as case=dat or mood=ind, kept sorted by key.
// The text form is `key=value|key=value`, with `_` for the empty set.
class FeatureSet {
 public:
  using Entry = std::pair<std::string, std::string>;

  FeatureSet() = default;

  // Throws FormatError on a missing `=`, an empty key or a repeated key.
  static FeatureSet Parse(std::string_view text);

  std::optional<std::string_view> Get(std::string_view key) const;
  bool Has(std::string_view key, std::string_view value) const;
  void Set(std::string_view key, std::string_view value);
  FeatureSet With(std::string_view key, std::string_view value) const;

  // True when every entry of `this` is also in `other`.
  bool IsSubsetOf(const FeatureSet& other) const;

  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  std::string ToString() const;

  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;
  friend auto operator<=>(const FeatureSet&, const FeatureSet&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace gecsynth

#endif  // GECSYNTH_FEATURES_H_
