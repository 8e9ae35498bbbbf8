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

// Readers and writers for the corpus file formats.
//
// Plain corpus: UTF-8, one sentence per line. Text is NFC-normalized on read,
// a trailing CR is dropped and blank lines are skipped; ids are 1-based line
// numbers.
//
// Tagged corpus: one token per line, `surface<TAB>lemma<TAB>pos<TAB>feats`,
// blank line between sentences, `_` for an empty lemma (read as the surface)
// or empty feats. A block may start with `# id = ...` and `# text = ...`
// comment lines; without an id line the id is the 1-based block number.
// Feature lists are written back sorted by key.
//
// Parallel corpus: `source<TAB>target` per line with TAB, newline, CR and
// backslash inside the text escaped as \t, \n, \r and \\. The optional
// sidecar (`<path>.edits.jsonl`) holds one JSON object per pair:
// {"id": ..., "ops": [...], "edits": [{"op", "token", "offset", "before",
// "after"}]}.

#ifndef GECSYNTH_CORPUS_IO_H_
#define GECSYNTH_CORPUS_IO_H_

#include <cstddef>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gecsynth/edit_log.h"
#include "gecsynth/features.h"

namespace gecsynth {

struct SentenceRecord {
  std::string id;
  std::string text;
  std::optional<std::string> provenance;

  friend bool operator==(const SentenceRecord&, const SentenceRecord&) = default;
};

struct TaggedToken {
  std::string surface;
  std::string lemma;
  std::string pos;
  FeatureSet feats;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

struct TaggedSentence {
  std::string id;
  std::vector<TaggedToken> tokens;
  std::optional<std::string> raw_text;

  friend bool operator==(const TaggedSentence&, const TaggedSentence&) = default;
};

enum class DecodePolicy { kStrict, kLenient };

class PlainCorpusReader {
 public:
  PlainCorpusReader(const std::string& path, DecodePolicy policy);

  // Returns false at end of input. Under kStrict an invalid UTF-8 line throws
  // FormatError naming the line; under kLenient it is skipped and counted.
  bool Next(SentenceRecord* record);

  size_t skipped() const { return skipped_; }

 private:
  std::string path_;
  std::ifstream in_;
  DecodePolicy policy_;
  size_t line_no_ = 0;
  size_t skipped_ = 0;
};

std::vector<SentenceRecord> ReadPlainCorpus(
    const std::string& path, DecodePolicy policy = DecodePolicy::kStrict,
    size_t* skipped = nullptr);
void WritePlainCorpus(const std::vector<SentenceRecord>& records,
                      const std::string& path);

class TaggedCorpusReader {
 public:
  explicit TaggedCorpusReader(const std::string& path);

  // Returns false at end of input. Throws FormatError on a line with the
  // wrong column count or a block with comments but no tokens.
  bool Next(TaggedSentence* sentence);

 private:
  std::string path_;
  std::ifstream in_;
  size_t line_no_ = 0;
  size_t block_no_ = 0;
};

std::vector<TaggedSentence> ReadTaggedCorpus(const std::string& path);
void WriteTaggedCorpus(const std::vector<TaggedSentence>& sentences,
                       const std::string& path);
std::string FormatTaggedSentence(const TaggedSentence& sentence,
                                 size_t block_index);

std::string EscapeField(std::string_view text);
// Throws FormatError on a dangling or unknown escape.
std::string UnescapeField(std::string_view text);

std::string SidecarPath(const std::string& pairs_path);
std::string SidecarLine(const ParallelPair& pair);
void ParseSidecarLine(std::string_view line, ParallelPair* pair);

class ParallelWriter {
 public:
  // With `sidecar_path` set, edit logs are written alongside the pairs.
  ParallelWriter(const std::string& path,
                 std::optional<std::string> sidecar_path = std::nullopt);

  void Write(const ParallelPair& pair);
  void Close();
  size_t count() const { return count_; }

 private:
  std::string path_;
  std::ofstream out_;
  std::unique_ptr<std::ofstream> sidecar_;
  size_t count_ = 0;
};

// Returns the number of pairs written.
size_t WriteParallel(const std::vector<ParallelPair>& pairs,
                     const std::string& path,
                     std::optional<std::string> sidecar_path = std::nullopt);

// Reads pairs; when `sidecar_path` is given its logs are attached and a line
// count mismatch throws AlignmentError.
std::vector<ParallelPair> ReadParallel(
    const std::string& path,
    std::optional<std::string> sidecar_path = std::nullopt);

// Reads a line-aligned text file (hypotheses, references) keeping blank lines
// so line numbers stay aligned. Lines are NFC-normalized; invalid UTF-8
// throws FormatError.
std::vector<std::string> ReadLines(const std::string& path);

}  // namespace gecsynth

#endif  // GECSYNTH_CORPUS_IO_H_
