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

#include <algorithm>

#include "gecsynth/errors.h"
#include "gecsynth/text.h"

namespace gecsynth {

FeatureSet FeatureSet::Parse(std::string_view text) {
  FeatureSet feats;
  if (text.empty() || text == "_") return feats;
  for (const std::string& part : SplitString(text, '|')) {
    const size_t eq = part.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw FormatError("malformed feature '" + part + "'");
    }
    const std::string key = part.substr(0, eq);
    if (feats.Get(key)) {
      throw FormatError("duplicate feature key '" + key + "'");
    }
    feats.Set(key, part.substr(eq + 1));
  }
  return feats;
}

std::optional<std::string_view> FeatureSet::Get(std::string_view key) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const Entry& e, std::string_view k) { return e.first < k; });
  if (it == entries_.end() || it->first != key) return std::nullopt;
  return std::string_view(it->second);
}

bool FeatureSet::Has(std::string_view key, std::string_view value) const {
  const auto v = Get(key);
  return v && *v == value;
}

void FeatureSet::Set(std::string_view key, std::string_view value) {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const Entry& e, std::string_view k) { return e.first < k; });
  if (it != entries_.end() && it->first == key) {
    it->second = std::string(value);
  } else {
    entries_.emplace(it, std::string(key), std::string(value));
  }
}

FeatureSet FeatureSet::With(std::string_view key, std::string_view value) const {
  FeatureSet copy = *this;
  copy.Set(key, value);
  return copy;
}

bool FeatureSet::IsSubsetOf(const FeatureSet& other) const {
  return std::all_of(entries_.begin(), entries_.end(), [&](const Entry& e) {
    return other.Has(e.first, e.second);
  });
}

std::string FeatureSet::ToString() const {
  if (entries_.empty()) return "_";
  std::string out;
  for (const auto& [key, value] : entries_) {
    if (!out.empty()) out.push_back('|');
    out.append(key);
    out.push_back('=');
    out.append(value);
  }
  return out;
}

}  // namespace gecsynth
