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

#ifndef VERIDICT_CHUNKER_H_
#define VERIDICT_CHUNKER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "veridict/textproc.h"

namespace veridict::chunker {

struct Chunk {
  std::string text;
  size_t word_count = 0;
  int64_t target_words = 0;
  // Set when the chunk contains a piece of a sentence longer than K words.
  bool hard_split = false;
};

struct ChunkPlan {
  size_t chunk_size_words = 0;
  std::vector<Chunk> chunks;
};

struct ChunkOptions {
  int64_t min_target_words = 30;
  const text::AbbreviationList *abbreviations = nullptr;
};

constexpr size_t kMinChunkWords = 32;

// round(chunk_words * gold_words / doc_words), raised to min_target_words.
// All counts must be >= 1.
int64_t AllocateTargetLength(int64_t doc_words, int64_t gold_words,
                             int64_t chunk_words, int64_t min_target_words = 30);

// Packs whole sentences, in order, into chunks of at most K words. A
// sentence longer than K is cut at K-word boundaries. Every chunk gets the
// same compression ratio as the whole document. Throws InvalidArgument for
// an empty document, K < 32 or gold_length < 1.
ChunkPlan PlanChunks(std::string_view document, size_t chunk_words,
                     int64_t gold_length, const ChunkOptions &options = {});

}  // namespace veridict::chunker

#endif  // VERIDICT_CHUNKER_H_
