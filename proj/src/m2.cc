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

#include "gecsynth/m2.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gecsynth/errors.h"
#include "gecsynth/text.h"

namespace gecsynth {
namespace {

constexpr std::string_view kSep = "|||";

void CheckToken(const std::string& token) {
  if (token.empty()) throw ArgumentError("empty token cannot be written to M2");
  if (token.find(kSep) != std::string::npos) {
    throw ArgumentError("token '" + token + "' contains |||");
  }
  size_t pos = 0;
  while (pos < token.size()) {
    if (IsSpace(NextCodePoint(token, &pos))) {
      throw ArgumentError("token '" + token + "' contains whitespace");
    }
  }
}

std::vector<std::string_view> SplitOn(std::string_view text, std::string_view sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  for (size_t p = text.find(sep); p != std::string_view::npos;
       p = text.find(sep, start)) {
    parts.push_back(text.substr(start, p - start));
    start = p + sep.size();
  }
  parts.push_back(text.substr(start));
  return parts;
}

TokenList SpaceTokens(std::string_view text) {
  TokenList tokens;
  for (std::string_view part : SplitOn(text, " ")) {
    if (!part.empty()) tokens.emplace_back(part);
  }
  return tokens;
}

bool ParseInt(std::string_view text, long long* value) {
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::string ToM2(const M2Entry& entry, int annotator) {
  for (const std::string& t : entry.source) CheckToken(t);
  const std::vector<EditSpan> spans = NormalizeSpans(entry.edits);
  std::string out = "S";
  for (const std::string& t : entry.source) {
    out.push_back(' ');
    out += t;
  }
  out.push_back('\n');
  for (const EditSpan& e : spans) {
    if (e.end > entry.source.size()) {
      throw ArgumentError("edit span " + std::to_string(e.start) + "-" +
                          std::to_string(e.end) + " exceeds source length");
    }
    for (const std::string& t : e.replacement) CheckToken(t);
    out += "A " + std::to_string(e.start) + " " + std::to_string(e.end) +
           "|||UNK|||" + JoinStrings(e.replacement, " ") +
           "|||REQUIRED|||-NONE-|||" + std::to_string(annotator) + "\n";
  }
  return out;
}

std::string ToM2(const std::vector<M2Entry>& entries, int annotator) {
  std::string out;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out.push_back('\n');
    out += ToM2(entries[i], annotator);
  }
  return out;
}

std::vector<M2Entry> FromM2(std::string_view text, int annotator) {
  std::vector<M2Entry> entries;
  bool in_block = false;
  size_t line_no = 0;
  size_t start = 0;
  const auto fail = [&](const std::string& what) {
    throw FormatError("M2 line " + std::to_string(line_no) + ": " + what);
  };
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      in_block = false;
      continue;
    }
    if (line.starts_with("S ") || line == "S") {
      if (in_block) fail("S line without a preceding blank line");
      entries.push_back({SpaceTokens(line.substr(1)), {}});
      in_block = true;
      continue;
    }
    if (!line.starts_with("A ")) fail("expected an S or A line");
    if (!in_block) fail("A line outside a block");
    const auto fields = SplitOn(line.substr(2), kSep);
    if (fields.size() != 6) fail("A line needs 6 |||-separated fields");
    const auto bounds = SplitOn(fields[0], " ");
    long long s = 0, e = 0, who = 0;
    if (bounds.size() != 2 || !ParseInt(bounds[0], &s) || !ParseInt(bounds[1], &e)) {
      fail("bad span '" + std::string(fields[0]) + "'");
    }
    if (!ParseInt(fields[5], &who)) fail("bad annotator id");
    if (fields[1] == "noop" || (s == -1 && e == -1)) continue;
    if (who != annotator) continue;
    M2Entry& entry = entries.back();
    if (s < 0 || e < s || static_cast<size_t>(e) > entry.source.size()) {
      fail("span " + std::to_string(s) + "-" + std::to_string(e) +
           " outside source of " + std::to_string(entry.source.size()) + " tokens");
    }
    std::string_view repl = fields[2];
    if (repl == "-NONE-") repl = "";
    entry.edits.push_back(
        {static_cast<size_t>(s), static_cast<size_t>(e), SpaceTokens(repl)});
  }
  for (M2Entry& entry : entries) {
    try {
      entry.edits = NormalizeSpans(std::move(entry.edits));
    } catch (const ArgumentError& err) {
      throw FormatError(std::string("M2: ") + err.what());
    }
  }
  return entries;
}

std::vector<M2Entry> ReadM2File(const std::string& path, int annotator) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (!IsValidUtf8(text)) throw FormatError(path + ": invalid UTF-8");
  try {
    return FromM2(NormalizeNfc(text), annotator);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void WriteM2File(const std::vector<M2Entry>& entries, const std::string& path,
                 int annotator) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << ToM2(entries, annotator);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace gecsynth
