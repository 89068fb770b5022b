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

#ifndef VERIDICT_EXTRACTIVE_H_
#define VERIDICT_EXTRACTIVE_H_

#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "veridict/recognizers.h"

namespace veridict::extractive {

// Lowercased content terms of a text: tokens stripped of surrounding
// punctuation, without stop words or tokens lacking letters and digits.
std::vector<std::string> ContentTerms(std::string_view text);

// Corpus-level inverse document frequencies, idf = log(N / df). Immutable
// after Build and safe to share between threads.
class TfidfTable {
 public:
  // Throws InvalidArgument on an empty corpus.
  static TfidfTable Build(const std::vector<std::string> &documents);

  // Terms never seen in the corpus are treated as df = 1.
  double Idf(const std::string &term) const;
  size_t num_documents() const { return num_documents_; }

 private:
  size_t num_documents_ = 0;
  std::unordered_map<std::string, size_t> df_;
};

struct BoostWeights {
  double date = 0.2;
  double entity = 0.2;
  double heading = 0.1;
  size_t heading_window = 3;
};

struct SentenceScore {
  size_t sentence_index = 0;
  double base_tfidf = 0.0;  // min-max normalized over the document
  double date_boost = 0.0;
  double entity_boost = 0.0;
  double heading_boost = 0.0;
  double total = 0.0;
};

// Short lines (< 6 tokens) in title case or all caps, or starting with a
// section number. Returns the byte offsets of the heading lines.
std::vector<size_t> DetectHeadingOffsets(std::string_view document);

std::vector<SentenceScore> ScoreSentences(std::string_view document,
                                          const TfidfTable &tfidf,
                                          const BoostWeights &weights,
                                          const recognizers::Recognizer &recognizer);

struct ExtractiveSummary {
  std::vector<size_t> selected;  // sentence indices, increasing
  std::vector<std::string> sentences;
  std::string text;  // selected sentences joined by a blank line
  size_t word_count = 0;
};

// Separator between extracted sentences.
inline constexpr std::string_view kSentenceJoin = "\n\n";

// Picks sentences in decreasing score order (earlier sentence on ties) until
// the next one would exceed the word budget; the first pick is always taken.
// Output keeps document order. Throws InvalidArgument for an empty document
// or a zero budget.
ExtractiveSummary CaseSummarize(std::string_view document, size_t budget_words,
                                const TfidfTable &tfidf,
                                const BoostWeights &weights,
                                const recognizers::Recognizer &recognizer);

// Pseudo-extractive supervision: for every gold sentence, the (up to) three
// document sentences with the highest positive ROUGE-2 F1; union over gold
// sentences. Throws InvalidArgument when either list is empty.
std::set<size_t> PseudoExtractiveLabels(const std::vector<std::string> &document_sentences,
                                        const std::vector<std::string> &gold_sentences);

}  // namespace veridict::extractive

#endif  // VERIDICT_EXTRACTIVE_H_
