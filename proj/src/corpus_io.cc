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

#include "gecsynth/corpus_io.h"

#include <json.hpp>

#include "gecsynth/errors.h"
#include "gecsynth/text.h"

namespace gecsynth {
namespace {

using nlohmann::json;

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

std::string Where(const std::string& path, size_t line_no) {
  return path + ":" + std::to_string(line_no);
}

bool ReadLine(std::ifstream& in, std::string* line) {
  if (!std::getline(in, *line)) return false;
  if (!line->empty() && line->back() == '\r') line->pop_back();
  return true;
}

constexpr std::string_view kIdComment = "# id = ";
constexpr std::string_view kTextComment = "# text = ";

}  // namespace

// --- Plain corpus -----------------------------------------------------------

PlainCorpusReader::PlainCorpusReader(const std::string& path,
                                     DecodePolicy policy)
    : path_(path), in_(path, std::ios::binary), policy_(policy) {
  if (!in_) throw IoError("cannot open '" + path + "'");
}

bool PlainCorpusReader::Next(SentenceRecord* record) {
  std::string line;
  while (ReadLine(in_, &line)) {
    ++line_no_;
    if (!IsValidUtf8(line)) {
      if (policy_ == DecodePolicy::kStrict) {
        throw FormatError(Where(path_, line_no_) + ": invalid UTF-8");
      }
      ++skipped_;
      continue;
    }
    if (Trim(line).empty()) continue;
    record->id = std::to_string(line_no_);
    record->text = NormalizeNfc(line);
    record->provenance.reset();
    return true;
  }
  if (in_.bad()) throw IoError("read failure on '" + path_ + "'");
  return false;
}

std::vector<SentenceRecord> ReadPlainCorpus(const std::string& path,
                                            DecodePolicy policy,
                                            size_t* skipped) {
  PlainCorpusReader reader(path, policy);
  std::vector<SentenceRecord> records;
  SentenceRecord record;
  while (reader.Next(&record)) records.push_back(record);
  if (skipped != nullptr) *skipped = reader.skipped();
  return records;
}

void WritePlainCorpus(const std::vector<SentenceRecord>& records,
                      const std::string& path) {
  std::ofstream out = OpenForWrite(path);
  for (const SentenceRecord& r : records) {
    if (r.text.find_first_of("\r\n") != std::string::npos) {
      throw ArgumentError("sentence " + r.id + " contains a line break");
    }
    out << r.text << '\n';
  }
  if (!out) throw IoError("write failure on '" + path + "'");
}

// --- Tagged corpus ----------------------------------------------------------

TaggedCorpusReader::TaggedCorpusReader(const std::string& path)
    : path_(path), in_(path, std::ios::binary) {
  if (!in_) throw IoError("cannot open '" + path + "'");
}

bool TaggedCorpusReader::Next(TaggedSentence* sentence) {
  sentence->tokens.clear();
  sentence->raw_text.reset();
  std::optional<std::string> id;
  bool in_block = false;
  size_t block_start = 0;
  std::string line;
  while (ReadLine(in_, &line)) {
    ++line_no_;
    if (line.empty()) {
      if (!in_block) continue;
      break;
    }
    if (!in_block) {
      in_block = true;
      block_start = line_no_;
    }
    if (!IsValidUtf8(line)) {
      throw FormatError(Where(path_, line_no_) + ": invalid UTF-8");
    }
    if (line.starts_with("# ")) {
      if (!sentence->tokens.empty()) {
        throw FormatError(Where(path_, line_no_) +
                          ": comment line inside a token block");
      }
      if (line.starts_with(kIdComment)) {
        id = line.substr(kIdComment.size());
      } else if (line.starts_with(kTextComment)) {
        sentence->raw_text = NormalizeNfc(line.substr(kTextComment.size()));
      }
      continue;
    }
    std::vector<std::string> fields = SplitString(NormalizeNfc(line), '\t');
    if (fields.size() != 4) {
      throw FormatError(Where(path_, line_no_) + ": expected 4 columns, got " +
                        std::to_string(fields.size()));
    }
    if (fields[0].empty()) {
      throw FormatError(Where(path_, line_no_) + ": empty surface");
    }
    TaggedToken token;
    token.surface = fields[0];
    token.lemma = fields[1] == "_" || fields[1].empty() ? fields[0] : fields[1];
    token.pos = fields[2] == "_" ? "" : fields[2];
    try {
      token.feats = FeatureSet::Parse(fields[3]);
    } catch (const FormatError& e) {
      throw FormatError(Where(path_, line_no_) + ": " + e.what());
    }
    sentence->tokens.push_back(std::move(token));
  }
  if (in_.bad()) throw IoError("read failure on '" + path_ + "'");
  if (!in_block) return false;
  ++block_no_;
  if (sentence->tokens.empty()) {
    throw FormatError(Where(path_, block_start) + ": sentence block has no tokens");
  }
  sentence->id = id ? *id : std::to_string(block_no_);
  return true;
}

std::vector<TaggedSentence> ReadTaggedCorpus(const std::string& path) {
  TaggedCorpusReader reader(path);
  std::vector<TaggedSentence> sentences;
  TaggedSentence sentence;
  while (reader.Next(&sentence)) sentences.push_back(sentence);
  return sentences;
}

std::string FormatTaggedSentence(const TaggedSentence& sentence,
                                 size_t block_index) {
  std::string out;
  if (sentence.id != std::to_string(block_index + 1)) {
    out.append(kIdComment).append(sentence.id).push_back('\n');
  }
  if (sentence.raw_text) {
    out.append(kTextComment).append(*sentence.raw_text).push_back('\n');
  }
  for (const TaggedToken& t : sentence.tokens) {
    out.append(t.surface).push_back('\t');
    out.append(t.lemma.empty() ? "_" : t.lemma).push_back('\t');
    out.append(t.pos.empty() ? "_" : t.pos).push_back('\t');
    out.append(t.feats.ToString()).push_back('\n');
  }
  return out;
}

void WriteTaggedCorpus(const std::vector<TaggedSentence>& sentences,
                       const std::string& path) {
  std::ofstream out = OpenForWrite(path);
  for (size_t i = 0; i < sentences.size(); ++i) {
    if (i > 0) out << '\n';
    out << FormatTaggedSentence(sentences[i], i);
  }
  if (!out) throw IoError("write failure on '" + path + "'");
}

// --- Parallel corpus --------------------------------------------------------

std::string EscapeField(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\':
        out.append("\\\\");
        break;
      case '\t':
        out.append("\\t");
        break;
      case '\n':
        out.append("\\n");
        break;
      case '\r':
        out.append("\\r");
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string UnescapeField(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\') {
      out.push_back(text[i]);
      continue;
    }
    if (++i == text.size()) throw FormatError("dangling backslash escape");
    switch (text[i]) {
      case '\\':
        out.push_back('\\');
        break;
      case 't':
        out.push_back('\t');
        break;
      case 'n':
        out.push_back('\n');
        break;
      case 'r':
        out.push_back('\r');
        break;
      default:
        throw FormatError(std::string("unknown escape \\") + text[i]);
    }
  }
  return out;
}

std::string SidecarPath(const std::string& pairs_path) {
  return pairs_path + ".edits.jsonl";
}

std::string SidecarLine(const ParallelPair& pair) {
  json edits = json::array();
  for (const EditRecord& r : pair.edits) {
    edits.push_back({{"op", NoiseOpName(r.op)},
                     {"token", r.token},
                     {"offset", r.offset},
                     {"before", r.before},
                     {"after", r.after}});
  }
  json ops = json::array();
  for (NoiseOp op : pair.applied_ops) ops.push_back(NoiseOpName(op));
  json line = {{"id", pair.id}, {"ops", ops}, {"edits", edits}};
  return line.dump();
}

void ParseSidecarLine(std::string_view line, ParallelPair* pair) {
  auto op_of = [](const json& j) {
    const auto op = ParseNoiseOp(j.get<std::string>());
    if (!op) throw FormatError("unknown op '" + j.get<std::string>() + "'");
    return *op;
  };
  try {
    const json j = json::parse(line);
    pair->id = j.at("id").get<std::string>();
    pair->applied_ops.clear();
    for (const json& op : j.at("ops")) pair->applied_ops.push_back(op_of(op));
    pair->edits.clear();
    for (const json& e : j.at("edits")) {
      EditRecord r;
      r.op = op_of(e.at("op"));
      r.token = e.at("token").get<size_t>();
      r.offset = e.at("offset").get<size_t>();
      r.before = e.at("before").get<std::string>();
      r.after = e.at("after").get<std::string>();
      pair->edits.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad sidecar line: ") + e.what());
  }
}

ParallelWriter::ParallelWriter(const std::string& path,
                               std::optional<std::string> sidecar_path)
    : path_(path), out_(OpenForWrite(path)) {
  if (sidecar_path) {
    sidecar_ = std::make_unique<std::ofstream>(OpenForWrite(*sidecar_path));
  }
}

void ParallelWriter::Write(const ParallelPair& pair) {
  out_ << EscapeField(pair.source) << '\t' << EscapeField(pair.target) << '\n';
  if (sidecar_) *sidecar_ << SidecarLine(pair) << '\n';
  ++count_;
}

void ParallelWriter::Close() {
  out_.flush();
  if (!out_) throw IoError("write failure on '" + path_ + "'");
  out_.close();
  if (sidecar_) {
    sidecar_->flush();
    if (!*sidecar_) throw IoError("write failure on sidecar of '" + path_ + "'");
    sidecar_->close();
  }
}

size_t WriteParallel(const std::vector<ParallelPair>& pairs,
                     const std::string& path,
                     std::optional<std::string> sidecar_path) {
  ParallelWriter writer(path, std::move(sidecar_path));
  for (const ParallelPair& pair : pairs) writer.Write(pair);
  writer.Close();
  return writer.count();
}

std::vector<ParallelPair> ReadParallel(const std::string& path,
                                       std::optional<std::string> sidecar_path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<ParallelPair> pairs;
  std::string line;
  size_t line_no = 0;
  while (ReadLine(in, &line)) {
    ++line_no;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw FormatError(Where(path, line_no) + ": expected source<TAB>target");
    }
    if (!IsValidUtf8(line)) {
      throw FormatError(Where(path, line_no) + ": invalid UTF-8");
    }
    ParallelPair pair;
    pair.id = std::to_string(line_no);
    try {
      pair.source = UnescapeField(std::string_view(line).substr(0, tab));
      pair.target = UnescapeField(std::string_view(line).substr(tab + 1));
    } catch (const FormatError& e) {
      throw FormatError(Where(path, line_no) + ": " + e.what());
    }
    pairs.push_back(std::move(pair));
  }
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  if (!sidecar_path) return pairs;

  std::ifstream side(*sidecar_path, std::ios::binary);
  if (!side) throw IoError("cannot open '" + *sidecar_path + "'");
  size_t count = 0;
  while (ReadLine(side, &line)) {
    if (count >= pairs.size()) {
      throw AlignmentError(*sidecar_path + " has more lines than " + path);
    }
    try {
      ParseSidecarLine(line, &pairs[count]);
    } catch (const FormatError& e) {
      throw FormatError(Where(*sidecar_path, count + 1) + ": " + e.what());
    }
    ++count;
  }
  if (count != pairs.size()) {
    throw AlignmentError(*sidecar_path + " has " + std::to_string(count) +
                         " lines, " + path + " has " +
                         std::to_string(pairs.size()));
  }
  return pairs;
}

std::vector<std::string> ReadLines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (ReadLine(in, &line)) {
    if (!IsValidUtf8(line)) {
      throw FormatError(Where(path, lines.size() + 1) + ": invalid UTF-8");
    }
    lines.push_back(NormalizeNfc(line));
  }
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return lines;
}

}  // namespace gecsynth
