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

#ifndef GECSYNTH_SRC_TSV_H_
#define GECSYNTH_SRC_TSV_H_

#include <fstream>
#include <string>
#include <vector>

#include "gecsynth/errors.h"
#include "gecsynth/text.h"

namespace gecsynth::internal {

// Calls fn(line_number, fields) for every data line of a lexicon-style TSV
// file. Blank lines and `#` comments are skipped; fields are NFC-normalized.
template <typename Fn>
void ForEachTsvRow(const std::string& path, size_t min_columns,
                   size_t max_columns, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line.front() == '#') continue;
    if (!IsValidUtf8(line)) {
      throw FormatError(path + ":" + std::to_string(line_no) +
                        ": invalid UTF-8");
    }
    std::vector<std::string> fields = SplitString(NormalizeNfc(line), '\t');
    if (fields.size() < min_columns || fields.size() > max_columns) {
      std::string expected = std::to_string(min_columns);
      if (max_columns != min_columns) {
        expected += "-" + std::to_string(max_columns);
      }
      throw FormatError(path + ":" + std::to_string(line_no) + ": expected " +
                        expected + " columns, got " +
                        std::to_string(fields.size()));
    }
    try {
      fn(line_no, fields);
    } catch (const FormatError& e) {
      throw FormatError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (in.bad()) throw IoError("read failure on '" + path + "'");
}

}  // namespace gecsynth::internal

#endif  // GECSYNTH_SRC_TSV_H_
