// Copyright 2026 The Veridict Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "veridict/chunker.h"

#include <algorithm>
#include <cmath>

#include "veridict/errors.h"

namespace veridict::chunker {

int64_t AllocateTargetLength(int64_t doc_words, int64_t gold_words,
                             int64_t chunk_words, int64_t min_target_words) {
  if (doc_words < 1 || gold_words < 1 || chunk_words < 1) {
    throw InvalidArgument("target length allocation needs positive counts");
  }
  double raw = static_cast<double>(chunk_words) * static_cast<double>(gold_words) /
               static_cast<double>(doc_words);
  return std::max<int64_t>(std::llround(raw), min_target_words);
}

namespace {

// Accumulates token ranges of the document into chunks.
class ChunkBuilder {
 public:
  ChunkBuilder(std::string_view doc, const std::vector<text::TokenSpan> &tokens,
               size_t k)
      : doc_(doc), tokens_(tokens), k_(k) {}

  void AddSentence(size_t first, size_t last) {
    size_t words = last - first;
    if (words > k_) {
      Flush();
      size_t pos = first;
      while (last - pos > k_) {
        Append(pos, pos + k_, true);
        Flush();
        pos += k_;
      }
      Append(pos, last, true);
      return;
    }
    if (count_ + words > k_) Flush();
    Append(first, last, false);
  }

  std::vector<Chunk> Finish() {
    Flush();
    return std::move(chunks_);
  }

 private:
  void Append(size_t first, size_t last, bool hard) {
    if (count_ == 0) first_ = first;
    last_ = last;
    count_ += last - first;
    hard_ = hard_ || hard;
  }

  void Flush() {
    if (count_ == 0) return;
    Chunk c;
    size_t begin = tokens_[first_].start;
    size_t end = tokens_[last_ - 1].end;
    c.text = std::string(doc_.substr(begin, end - begin));
    c.word_count = count_;
    c.hard_split = hard_;
    chunks_.push_back(std::move(c));
    count_ = 0;
    hard_ = false;
  }

  std::string_view doc_;
  const std::vector<text::TokenSpan> &tokens_;
  size_t k_;
  std::vector<Chunk> chunks_;
  size_t first_ = 0;
  size_t last_ = 0;
  size_t count_ = 0;
  bool hard_ = false;
};

}  // namespace

ChunkPlan PlanChunks(std::string_view document, size_t chunk_words,
                     int64_t gold_length, const ChunkOptions &options) {
  if (chunk_words < kMinChunkWords) {
    throw InvalidArgument("chunk size must be at least 32 words");
  }
  if (gold_length < 1) throw InvalidArgument("gold length must be >= 1");
  std::vector<text::TokenSpan> tokens = text::TokenSpans(document);
  if (tokens.empty()) throw InvalidArgument("cannot chunk an empty document");

  const text::AbbreviationList &abbrevs =
      options.abbreviations ? *options.abbreviations
                            : text::AbbreviationList::Default();
  ChunkPlan plan;
  plan.chunk_size_words = chunk_words;
  const int64_t doc_words = static_cast<int64_t>(tokens.size());

  if (tokens.size() <= chunk_words) {
    Chunk whole;
    whole.text = std::string(document);
    whole.word_count = tokens.size();
    plan.chunks.push_back(std::move(whole));
  } else {
    // Sentence annotations are computed on the same whitespace tokens, so a
    // sentence maps to a contiguous token index range.
    std::vector<text::Token> annotated = text::AnnotateTokens(document, abbrevs);
    ChunkBuilder builder(document, tokens, chunk_words);
    size_t first = 0;
    for (size_t i = 0; i < annotated.size(); ++i) {
      if (annotated[i].sentence_initial) first = i;
      if (annotated[i].sentence_final) builder.AddSentence(first, i + 1);
    }
    plan.chunks = builder.Finish();
  }
  for (Chunk &c : plan.chunks) {
    c.target_words =
        AllocateTargetLength(doc_words, gold_length,
                             static_cast<int64_t>(c.word_count),
                             options.min_target_words);
  }
  return plan;
}

}  // namespace veridict::chunker
