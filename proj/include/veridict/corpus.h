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

#ifndef VERIDICT_CORPUS_H_
#define VERIDICT_CORPUS_H_

#include <string>
#include <string_view>
#include <vector>

namespace veridict::corpus {

enum class Split { kTrain, kTest, kValidation };
enum class Source { kInAbs, kUkAbs, kGovReport, kGeneric };

std::string_view SplitName(Split split);
Split ParseSplit(std::string_view name);
std::string_view SourceName(Source source);
Source ParseSource(std::string_view name);

// One (document, gold summary) pair. Text is NFC-normalized UTF-8.
struct CorpusRecord {
  std::string id;
  std::string document_text;
  std::string gold_summary_text;
  Split split = Split::kTest;
  Source source = Source::kGeneric;

  bool operator==(const CorpusRecord &other) const = default;
};

struct CorpusStats {
  size_t n_documents = 0;
  double avg_doc_words = 0.0;
  double avg_summary_words = 0.0;
  double coverage = 0.0;
  double density = 0.0;
};

// Loads <root>/{train,test,validation}/{judgement,summary}/<id>.txt. Split
// directories that do not exist are skipped; an empty root yields no records.
// Records are ordered by (split, id). Throws MissingPairError when a file has
// no counterpart, IoError when a file cannot be read, InvalidArgument on
// empty texts or duplicate ids.
std::vector<CorpusRecord> LoadCorpus(const std::string &root, Source source);

// JSON Lines interchange: {"id","document","summary","split","source"}.
std::vector<CorpusRecord> ReadJsonl(const std::string &path);
void WriteJsonl(const std::string &path, const std::vector<CorpusRecord> &records);

// Loads either a JSONL file or a directory layout, depending on the path.
std::vector<CorpusRecord> LoadAny(const std::string &path, Source source);

// Word-count averages: total words over all documents (summaries) divided by
// the number of documents. Coverage and density are left at zero; see
// ComputeCoverageDensity. Throws InvalidArgument on an empty list.
CorpusStats ComputeStats(const std::vector<CorpusRecord> &records);

struct FragmentStats {
  double coverage = 0.0;
  double density = 0.0;
};

// Extractive fragment statistics of one summary against its document, using
// greedy longest shared token runs over case-folded word tokens.
FragmentStats ComputeFragmentStats(std::string_view document,
                                   std::string_view summary);

// Mean of the per-pair fragment statistics. Throws InvalidArgument on an
// empty list.
FragmentStats ComputeCoverageDensity(const std::vector<CorpusRecord> &records);

}  // namespace veridict::corpus

#endif  // VERIDICT_CORPUS_H_
