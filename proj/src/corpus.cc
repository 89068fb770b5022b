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

#include "veridict/corpus.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "veridict/errors.h"
#include "veridict/textproc.h"

namespace veridict::corpus {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr Split kSplits[] = {Split::kTrain, Split::kTest, Split::kValidation};

std::string ReadText(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  return text::NormalizeNfc(text::SanitizeUtf8(buf.str()));
}

// Basename (without .txt) -> path for every regular .txt file in dir.
std::map<std::string, fs::path> ListTexts(const fs::path &dir) {
  std::map<std::string, fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".txt") continue;
    out.emplace(entry.path().stem().string(), entry.path());
  }
  return out;
}

void CheckRecord(const CorpusRecord &r) {
  if (r.document_text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw InvalidArgument("record '" + r.id + "' has an empty document");
  }
  if (r.gold_summary_text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw InvalidArgument("record '" + r.id + "' has an empty summary");
  }
}

void CheckUniqueIds(const std::vector<CorpusRecord> &records) {
  std::set<std::string> seen;
  for (const auto &r : records) {
    if (!seen.insert(r.id).second) {
      throw InvalidArgument("duplicate record id '" + r.id + "'");
    }
  }
}

}  // namespace

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kTest: return "test";
    case Split::kValidation: return "validation";
  }
  return "test";
}

Split ParseSplit(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "test") return Split::kTest;
  if (name == "validation") return Split::kValidation;
  throw InvalidArgument("unknown split '" + std::string(name) + "'");
}

std::string_view SourceName(Source source) {
  switch (source) {
    case Source::kInAbs: return "in_abs";
    case Source::kUkAbs: return "uk_abs";
    case Source::kGovReport: return "govreport";
    case Source::kGeneric: return "generic";
  }
  return "generic";
}

Source ParseSource(std::string_view name) {
  if (name == "in_abs") return Source::kInAbs;
  if (name == "uk_abs") return Source::kUkAbs;
  if (name == "govreport") return Source::kGovReport;
  if (name == "generic") return Source::kGeneric;
  throw InvalidArgument("unknown corpus source '" + std::string(name) + "'");
}

std::vector<CorpusRecord> LoadCorpus(const std::string &root, Source source) {
  if (!fs::is_directory(root)) {
    throw IoError(root, "corpus root is not a directory");
  }
  std::vector<CorpusRecord> records;
  for (Split split : kSplits) {
    fs::path split_dir = fs::path(root) / std::string(SplitName(split));
    if (!fs::is_directory(split_dir)) continue;
    auto docs = ListTexts(split_dir / "judgement");
    auto sums = ListTexts(split_dir / "summary");
    for (const auto &[id, path] : docs) {
      if (!sums.count(id)) throw MissingPairError(id);
    }
    for (const auto &[id, path] : sums) {
      if (!docs.count(id)) throw MissingPairError(id);
    }
    for (const auto &[id, path] : docs) {
      CorpusRecord r;
      r.id = id;
      r.document_text = ReadText(path);
      r.gold_summary_text = ReadText(sums.at(id));
      r.split = split;
      r.source = source;
      CheckRecord(r);
      records.push_back(std::move(r));
    }
  }
  CheckUniqueIds(records);
  return records;
}

std::vector<CorpusRecord> ReadJsonl(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot read corpus file");
  std::vector<CorpusRecord> records;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
      CorpusRecord r;
      r.id = j.at("id").get<std::string>();
      r.document_text = text::NormalizeNfc(j.at("document").get<std::string>());
      r.gold_summary_text = text::NormalizeNfc(j.at("summary").get<std::string>());
      r.split = ParseSplit(j.value("split", "test"));
      r.source = ParseSource(j.value("source", "generic"));
      CheckRecord(r);
      records.push_back(std::move(r));
    } catch (const json::exception &e) {
      throw IoError(path, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  CheckUniqueIds(records);
  return records;
}

void WriteJsonl(const std::string &path,
                const std::vector<CorpusRecord> &records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot write corpus file");
  for (const auto &r : records) {
    json j = {{"id", r.id},
              {"document", r.document_text},
              {"summary", r.gold_summary_text},
              {"split", SplitName(r.split)},
              {"source", SourceName(r.source)}};
    out << j.dump() << '\n';
  }
  if (!out) throw IoError(path, "write failed");
}

std::vector<CorpusRecord> LoadAny(const std::string &path, Source source) {
  if (fs::is_directory(path)) return LoadCorpus(path, source);
  return ReadJsonl(path);
}

CorpusStats ComputeStats(const std::vector<CorpusRecord> &records) {
  if (records.empty()) throw InvalidArgument("corpus statistics need records");
  size_t doc_words = 0;
  size_t sum_words = 0;
  for (const auto &r : records) {
    doc_words += text::CountWords(r.document_text);
    sum_words += text::CountWords(r.gold_summary_text);
  }
  CorpusStats stats;
  stats.n_documents = records.size();
  stats.avg_doc_words = static_cast<double>(doc_words) / records.size();
  stats.avg_summary_words = static_cast<double>(sum_words) / records.size();
  return stats;
}

FragmentStats ComputeFragmentStats(std::string_view document,
                                   std::string_view summary) {
  std::vector<std::string> doc_tokens = text::MetricTokens(document);
  std::vector<std::string> sum_tokens = text::MetricTokens(summary);
  FragmentStats out;
  if (sum_tokens.empty()) return out;

  std::unordered_map<std::string, int> vocab;
  auto intern = [&](const std::string &t) {
    return vocab.emplace(t, static_cast<int>(vocab.size())).first->second;
  };
  std::vector<int> a, s;
  for (const auto &t : doc_tokens) a.push_back(intern(t));
  for (const auto &t : sum_tokens) s.push_back(intern(t));
  std::vector<std::vector<size_t>> positions(vocab.size());
  for (size_t j = 0; j < a.size(); ++j) positions[a[j]].push_back(j);

  // For each summary position take the longest shared run starting there;
  // after a match the document scan resumes past the matched run.
  size_t covered = 0;
  double squared = 0.0;
  size_t i = 0;
  while (i < s.size()) {
    size_t best = 0;
    size_t next_j = 0;
    for (size_t j : positions[s[i]]) {
      if (j < next_j) continue;
      size_t len = 0;
      while (i + len < s.size() && j + len < a.size() && s[i + len] == a[j + len]) {
        ++len;
      }
      best = std::max(best, len);
      next_j = j + len;
    }
    if (best > 0) {
      covered += best;
      squared += static_cast<double>(best) * static_cast<double>(best);
    }
    i += std::max<size_t>(best, 1);
  }
  out.coverage = static_cast<double>(covered) / s.size();
  out.density = squared / s.size();
  return out;
}

FragmentStats ComputeCoverageDensity(const std::vector<CorpusRecord> &records) {
  if (records.empty()) throw InvalidArgument("coverage/density need records");
  FragmentStats mean;
  for (const auto &r : records) {
    FragmentStats f = ComputeFragmentStats(r.document_text, r.gold_summary_text);
    mean.coverage += f.coverage;
    mean.density += f.density;
  }
  mean.coverage /= records.size();
  mean.density /= records.size();
  return mean;
}

}  // namespace veridict::corpus
