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

#include "veridict/corrector.h"

#include <random>

#include <gtest/gtest.h>

#include "test_support.h"
#include "veridict/embedding.h"
#include "veridict/extractive.h"
#include "veridict/textproc.h"

namespace veridict::corrector {
namespace {

const char kDoc[] =
    "BENCH:\nAiyar, N. Chandrasekhara\n\nThe Supreme Court of India heard the appeal on "
    "February 1, 2020. The accused initially demanded Rs. 30,000 later reduced to Rs. 29,500 "
    "for granting the complainant vacant possession of a flat.";

class CorrectorTest : public ::testing::Test {
 protected:
  recognizers::BuiltinRecognizer rec_;
  embedding::NgramEmbedder emb_;
};

std::vector<std::string> Identities(const std::vector<EntityMention> &ms) {
  std::vector<std::string> out;
  for (const auto &m : ms) out.push_back(m.Identity());
  return out;
}

TEST_F(CorrectorTest, EntitySetsAreSetDifference) {
  EntitySets s = ComputeEntitySets(kDoc, "Aiyar, N. Chandrasekhara paid Rs. 29,500 and 12.", rec_);
  EXPECT_FALSE(s.v_j.empty());
  ASSERT_EQ(s.v_r.size(), 1u);
  EXPECT_EQ(s.v_r[0].canonical, "12");
  auto j = Identities(s.v_j);
  for (const auto &m : s.v_s) {
    bool in_j = std::find(j.begin(), j.end(), m.Identity()) != j.end();
    bool in_r = false;
    for (const auto &r : s.v_r) in_r |= r.Identity() == m.Identity();
    EXPECT_NE(in_j, in_r) << m.surface;
  }
}

TEST_F(CorrectorTest, RepairsNumberKeepingCurrency) {
  const std::string summary =
      "The prosecution asserts that the accused initially demanded Rs. 30,000 later reduced to "
      "Rs 26,500 for granting the complainant vacant possession of a flat.";
  Correction c = CorrectSummary(kDoc, summary, rec_, emb_);
  EXPECT_EQ(c.text,
            "The prosecution asserts that the accused initially demanded Rs. 30,000 later "
            "reduced to Rs 29,500 for granting the complainant vacant possession of a flat.");
  ASSERT_EQ(c.ledger.entries.size(), 1u);
  const Replacement &r = c.ledger.entries[0];
  EXPECT_EQ(r.original.canonical, "26500");
  EXPECT_EQ(r.replacement.canonical, "29500");
  ASSERT_EQ(r.spans_rewritten.size(), 1u);
  EXPECT_EQ(summary.substr(r.spans_rewritten[0].first,
                           r.spans_rewritten[0].second - r.spans_rewritten[0].first),
            "26,500");
  EXPECT_TRUE(c.ledger.warnings.empty());
}

TEST_F(CorrectorTest, RepairsJudgeName) {
  const std::string summary =
      "On February 1, 2020, the Honorable Chandrasekhar A. Lama of India entered a final "
      "judgment.";
  Correction c = CorrectSummary(kDoc, summary, rec_, emb_);
  EXPECT_EQ(c.text,
            "On February 1, 2020, the Honorable Aiyar, N. Chandrasekhara of India entered a "
            "final judgment.");
  EXPECT_TRUE(ComputeEntitySets(kDoc, c.text, rec_).v_r.empty());
}

TEST_F(CorrectorTest, EveryOccurrenceRewrittenAndOutsideBytesKept) {
  const std::string summary = "Rs. 26,500 was demanded. Later Rs. 26,500 was paid back.";
  Correction c = CorrectSummary(kDoc, summary, rec_, emb_);
  EXPECT_EQ(c.text, "Rs. 29,500 was demanded. Later Rs. 29,500 was paid back.");
  ASSERT_EQ(c.ledger.entries.size(), 1u);
  EXPECT_EQ(c.ledger.entries[0].spans_rewritten.size(), 2u);
}

TEST_F(CorrectorTest, UnrepairableIsWarnedAndUntouched) {
  const std::string doc = "the appeal was dismissed without any costs at all.";
  const std::string summary = "Mr. Zorblax paid 77 rupees.";
  Correction c = CorrectSummary(doc, summary, rec_, emb_);
  EXPECT_EQ(c.text, summary);
  EXPECT_TRUE(c.ledger.entries.empty());
  EXPECT_EQ(c.ledger.warnings.size(), 2u);
  auto j = LedgerToJson(c.ledger);
  EXPECT_EQ(j["unrepairable"].size(), 2u);
  EXPECT_TRUE(j["entries"].empty());
}

TEST_F(CorrectorTest, EmptyAndCleanSummaries) {
  Correction empty = CorrectSummary(kDoc, "", rec_, emb_);
  EXPECT_EQ(empty.text, "");
  EXPECT_TRUE(empty.ledger.empty());
  const std::string clean = "The accused demanded Rs. 29,500 from the complainant.";
  ASSERT_TRUE(ComputeEntitySets(kDoc, clean, rec_).v_r.empty());
  Correction same = CorrectSummary(kDoc, clean, rec_, emb_);
  EXPECT_EQ(same.text, clean);
  EXPECT_TRUE(same.ledger.empty());
}

TEST_F(CorrectorTest, FuzzedHallucinationsAreRemovedIdempotently) {
  auto records = testing::FixtureCorpus();
  std::vector<std::string> docs;
  for (const auto &r : records) docs.push_back(r.document_text);
  auto tfidf = extractive::TfidfTable::Build(docs);
  std::mt19937 rng(5);
  const std::vector<std::string> fakes = {"Zorblax Quintero", "Mr. Hallam Vosk",
                                          "Rs. 41,117", "Kelvinator Ltd.", "1999"};
  for (const auto &r : records) {
    auto ext = extractive::CaseSummarize(r.document_text, 80, tfidf, {}, rec_);
    std::string summary = ext.text + "\n\nIt was argued before " +
                          fakes[rng() % fakes.size()] + " that " +
                          fakes[rng() % fakes.size()] + " was due.";
    Correction c = CorrectSummary(r.document_text, summary, rec_, emb_);
    EXPECT_TRUE(c.ledger.warnings.empty()) << r.id;
    EXPECT_TRUE(ComputeEntitySets(r.document_text, c.text, rec_).v_r.empty())
        << r.id << "\n" << c.text;
    // The untouched extract prefix is byte-identical.
    EXPECT_EQ(c.text.substr(0, ext.text.size()), ext.text) << r.id;
    Correction again = CorrectSummary(r.document_text, c.text, rec_, emb_);
    EXPECT_EQ(again.text, c.text) << r.id;
    EXPECT_TRUE(again.ledger.entries.empty()) << r.id;
  }
}

}  // namespace
}  // namespace veridict::corrector
