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
#include <random>

#include <gtest/gtest.h>

#include "test_support.h"
#include "veridict/errors.h"
#include "veridict/textproc.h"

namespace veridict::corpus {
namespace {

using testing::TempDir;
using testing::WriteFile;

// Newsroom reference loop: for each summary position, the longest run
// shared with any document position; advance past it.
FragmentStats GreedyFragmentsOracle(std::string_view doc, std::string_view sum) {
  std::vector<std::string> a = text::MetricTokens(doc);
  std::vector<std::string> s = text::MetricTokens(sum);
  std::vector<size_t> fragments;
  size_t i = 0;
  while (i < s.size()) {
    size_t best = 0;
    size_t j = 0;
    while (j < a.size()) {
      if (s[i] == a[j]) {
        size_t ii = i, jj = j;
        while (ii < s.size() && jj < a.size() && s[ii] == a[jj]) {
          ++ii;
          ++jj;
        }
        best = std::max(best, ii - i);
        j = jj;
      } else {
        ++j;
      }
    }
    if (best > 0) fragments.push_back(best);
    i += std::max<size_t>(best, 1);
  }
  FragmentStats out;
  if (s.empty()) return out;
  for (size_t f : fragments) {
    out.coverage += static_cast<double>(f) / s.size();
    out.density += static_cast<double>(f * f) / s.size();
  }
  return out;
}

TEST(LoadCorpus, PairsByBasenameAcrossSplits) {
  TempDir dir;
  WriteFile(dir.File("train/judgement/b.txt"), "Doc b text.");
  WriteFile(dir.File("train/summary/b.txt"), "Sum b.");
  WriteFile(dir.File("test/judgement/a.txt"), "Doc a text.");
  WriteFile(dir.File("test/summary/a.txt"), "Sum a.");
  auto records = LoadCorpus(dir.path(), Source::kUkAbs);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].id, "b");
  EXPECT_EQ(records[0].split, Split::kTrain);
  EXPECT_EQ(records[1].id, "a");
  EXPECT_EQ(records[1].split, Split::kTest);
  EXPECT_EQ(records[1].source, Source::kUkAbs);
  EXPECT_EQ(records[1].document_text, "Doc a text.");
}

TEST(LoadCorpus, FixtureHasTenTestPairs) {
  auto records = testing::FixtureCorpus();
  ASSERT_EQ(records.size(), 10u);
  for (const auto &r : records) EXPECT_EQ(r.split, Split::kTest);
}

TEST(LoadCorpus, EmptyDirectoryIsEmptyCorpus) {
  TempDir dir;
  EXPECT_TRUE(LoadCorpus(dir.path(), Source::kGeneric).empty());
}

TEST(LoadCorpus, MissingSummaryNamesTheId) {
  TempDir dir;
  WriteFile(dir.File("test/judgement/X.txt"), "Doc.");
  WriteFile(dir.File("test/summary/Y.txt"), "Sum.");
  try {
    LoadCorpus(dir.path(), Source::kGeneric);
    FAIL() << "expected MissingPairError";
  } catch (const MissingPairError &e) {
    EXPECT_TRUE(e.id() == "X" || e.id() == "Y");
  }
}

TEST(LoadCorpus, InvalidBytesAreReplaced) {
  TempDir dir;
  WriteFile(dir.File("test/judgement/a.txt"), "Bad \xFF byte.");
  WriteFile(dir.File("test/summary/a.txt"), "Sum.");
  auto records = LoadCorpus(dir.path(), Source::kGeneric);
  EXPECT_EQ(records[0].document_text, "Bad \xEF\xBF\xBD byte.");
}

TEST(LoadCorpus, EmptyTextIsRejected) {
  TempDir dir;
  WriteFile(dir.File("test/judgement/a.txt"), "   ");
  WriteFile(dir.File("test/summary/a.txt"), "Sum.");
  EXPECT_THROW(LoadCorpus(dir.path(), Source::kGeneric), InvalidArgument);
}

TEST(Jsonl, RoundTripIsIdempotent) {
  TempDir dir;
  auto records = testing::FixtureCorpus();
  WriteJsonl(dir.File("c.jsonl"), records);
  auto again = ReadJsonl(dir.File("c.jsonl"));
  EXPECT_EQ(again, records);
  EXPECT_EQ(LoadAny(dir.File("c.jsonl"), Source::kGeneric), records);
  EXPECT_EQ(LoadAny(testing::FixtureCorpusRoot(), Source::kInAbs), records);
}

TEST(ComputeStats, DirectCounts) {
  CorpusRecord r{"x", "a b c", "a", Split::kTest, Source::kGeneric};
  CorpusStats s = ComputeStats({r});
  EXPECT_EQ(s.n_documents, 1u);
  EXPECT_DOUBLE_EQ(s.avg_doc_words, 3.0);
  EXPECT_DOUBLE_EQ(s.avg_summary_words, 1.0);
  EXPECT_THROW(ComputeStats({}), InvalidArgument);
}

TEST(ComputeStats, PermutationInvariant) {
  auto records = testing::FixtureCorpus();
  CorpusStats a = ComputeStats(records);
  std::mt19937 rng(1);
  std::shuffle(records.begin(), records.end(), rng);
  CorpusStats b = ComputeStats(records);
  EXPECT_DOUBLE_EQ(a.avg_doc_words, b.avg_doc_words);
  EXPECT_DOUBLE_EQ(a.avg_summary_words, b.avg_summary_words);
}

TEST(FragmentStats, IdenticalAndDisjoint) {
  FragmentStats same = ComputeFragmentStats("a b c d e", "a b c d e");
  EXPECT_DOUBLE_EQ(same.coverage, 1.0);
  EXPECT_DOUBLE_EQ(same.density, 5.0);
  FragmentStats none = ComputeFragmentStats("a b c", "x y z");
  EXPECT_DOUBLE_EQ(none.coverage, 0.0);
  EXPECT_DOUBLE_EQ(none.density, 0.0);
}

TEST(FragmentStats, MatchesReferenceLoop) {
  std::mt19937 rng(17);
  const std::vector<std::string> alphabet = {"a", "b", "c", "d", "e", "f"};
  for (int iter = 0; iter < 500; ++iter) {
    std::string doc = testing::RandomTokens(rng, 1 + iter % 30, alphabet);
    std::string sum = testing::RandomTokens(rng, 1 + iter % 13, alphabet);
    FragmentStats got = ComputeFragmentStats(doc, sum);
    FragmentStats want = GreedyFragmentsOracle(doc, sum);
    EXPECT_NEAR(got.coverage, want.coverage, 1e-12) << doc << " | " << sum;
    EXPECT_NEAR(got.density, want.density, 1e-12) << doc << " | " << sum;
  }
}

TEST(FragmentStats, CorpusBounds) {
  auto records = testing::FixtureCorpus();
  FragmentStats fs = ComputeCoverageDensity(records);
  CorpusStats stats = ComputeStats(records);
  EXPECT_GE(fs.coverage, 0.0);
  EXPECT_LE(fs.coverage, 1.0);
  EXPECT_LE(fs.density, stats.avg_summary_words);
  EXPECT_THROW(ComputeCoverageDensity({}), InvalidArgument);
}

}  // namespace
}  // namespace veridict::corpus
