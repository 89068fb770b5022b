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

#include "veridict/extractive.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_support.h"
#include "veridict/errors.h"
#include "veridict/textproc.h"

namespace veridict::extractive {
namespace {

recognizers::BuiltinRecognizer &Rec() {
  static recognizers::BuiltinRecognizer r;
  return r;
}

TEST(Tfidf, IdfFormula) {
  std::vector<std::string> docs(100, "common words here");
  docs[0] += " rarity";
  TfidfTable t = TfidfTable::Build(docs);
  EXPECT_DOUBLE_EQ(t.Idf("common"), 0.0);
  EXPECT_DOUBLE_EQ(t.Idf("rarity"), std::log(100.0));
  EXPECT_DOUBLE_EQ(t.Idf("unseen"), std::log(100.0));
  EXPECT_THROW(TfidfTable::Build({}), InvalidArgument);
}

TEST(ContentTerms, FoldsStripsAndDropsStopWords) {
  EXPECT_EQ(ContentTerms("The Court, in (Madras) held."),
            (std::vector<std::string>{"court", "madras", "held"}));
}

TEST(CaseSummarize, BudgetCoversWholeDocument) {
  const std::string doc = "First point here. Second point there. Third one now.";
  TfidfTable t = TfidfTable::Build({doc, "other text"});
  ExtractiveSummary s = CaseSummarize(doc, 1000, t, {}, Rec());
  EXPECT_EQ(s.selected, (std::vector<size_t>{0, 1, 2}));
  EXPECT_EQ(s.sentences, text::SentenceTexts(doc));
  EXPECT_EQ(s.word_count, 9u);
}

TEST(CaseSummarize, TieGoesToEarlierSentence) {
  const std::string doc = "appeal dismissed today. appeal dismissed today.";
  TfidfTable t = TfidfTable::Build({doc, "unrelated words"});
  ExtractiveSummary s = CaseSummarize(doc, 3, t, {}, Rec());
  EXPECT_EQ(s.selected, (std::vector<size_t>{0}));
}

TEST(CaseSummarize, Preconditions) {
  TfidfTable t = TfidfTable::Build({"x"});
  EXPECT_THROW(CaseSummarize("", 10, t, {}, Rec()), InvalidArgument);
  EXPECT_THROW(CaseSummarize("Some text.", 0, t, {}, Rec()), InvalidArgument);
}

TEST(ScoreSentences, DateBoostIsAdditive) {
  const std::string doc =
      "the appeal was heard at length. it was decided on 25 June 1954 finally. "
      "costs follow the event here.";
  TfidfTable t = TfidfTable::Build({doc, "heard appeal costs"});
  BoostWeights w;
  auto scores = ScoreSentences(doc, t, w, Rec());
  ASSERT_EQ(scores.size(), 3u);
  EXPECT_DOUBLE_EQ(scores[0].date_boost, 0.0);
  EXPECT_DOUBLE_EQ(scores[1].date_boost, w.date);
  EXPECT_DOUBLE_EQ(scores[2].date_boost, 0.0);
  for (const auto &s : scores) {
    EXPECT_DOUBLE_EQ(s.total, s.base_tfidf + s.date_boost + s.entity_boost + s.heading_boost);
    EXPECT_GE(s.base_tfidf, 0.0);
    EXPECT_LE(s.base_tfidf, 1.0);
  }
}

TEST(ScoreSentences, HeadingWindow) {
  const std::string doc =
      "intro text goes here.\n\nFACTS\n\na one. b two. c three. d four. e five.";
  TfidfTable t = TfidfTable::Build({doc});
  BoostWeights w;
  auto scores = ScoreSentences(doc, t, w, Rec());
  ASSERT_EQ(scores.size(), 7u);
  EXPECT_DOUBLE_EQ(scores[0].heading_boost, 0.0);
  for (size_t i = 1; i <= 4; ++i) EXPECT_DOUBLE_EQ(scores[i].heading_boost, w.heading) << i;
  EXPECT_DOUBLE_EQ(scores[5].heading_boost, 0.0);
  EXPECT_DOUBLE_EQ(scores[6].heading_boost, 0.0);
}

TEST(DetectHeadingOffsets, Forms) {
  const std::string doc =
      "1. Introduction\nthe appellant sued the state.\nTHE CONTENTIONS\nFindings of Fact\n"
      "Held, that\n";
  auto offs = DetectHeadingOffsets(doc);
  ASSERT_EQ(offs.size(), 3u);
  EXPECT_EQ(offs[0], 0u);
  EXPECT_EQ(doc.substr(offs[1], 15), "THE CONTENTIONS");
  EXPECT_EQ(doc.substr(offs[2], 8), "Findings");
}

TEST(CaseSummarize, FuzzedInvariants) {
  std::mt19937 rng(31);
  std::vector<std::string> docs;
  for (int i = 0; i < 30; ++i) docs.push_back(testing::RandomText(rng, 50 + i * 20));
  TfidfTable t = TfidfTable::Build(docs);
  for (const auto &doc : docs) {
    auto sentences = text::SentenceTexts(doc);
    size_t longest = 0;
    for (const auto &s : sentences) longest = std::max(longest, text::CountWords(s));
    for (size_t budget : {5, 30, 120}) {
      ExtractiveSummary s = CaseSummarize(doc, budget, t, {}, Rec());
      EXPECT_LE(s.word_count, budget + longest);
      EXPECT_EQ(s.word_count, text::CountWords(s.text));
      for (size_t i = 1; i < s.selected.size(); ++i) EXPECT_LT(s.selected[i - 1], s.selected[i]);
      for (const auto &sent : s.sentences) EXPECT_NE(doc.find(sent), std::string::npos);
    }
  }
}

TEST(PseudoLabels, Examples) {
  std::vector<std::string> doc = {"the court held the appeal valid", "costs were awarded",
                                  "nothing here matches"};
  auto labels = PseudoExtractiveLabels(doc, {"costs were awarded"});
  EXPECT_TRUE(labels.count(1));
  EXPECT_LE(PseudoExtractiveLabels({"a b c", "b c d"}, {"a b c d"}).size(), 2u);

  std::vector<std::string> six = {"a b x", "a b y", "a b z", "c d x", "c d y", "c d z"};
  EXPECT_EQ(PseudoExtractiveLabels(six, {"a b", "c d"}).size(), 6u);
  EXPECT_THROW(PseudoExtractiveLabels({}, {"a"}), InvalidArgument);
}

TEST(PseudoLabels, MonotoneUnderUnrelatedAppend) {
  std::mt19937 rng(12);
  for (int i = 0; i < 50; ++i) {
    auto doc = text::SentenceTexts(testing::RandomText(rng, 120));
    auto gold = text::SentenceTexts(testing::RandomText(rng, 30));
    auto before = PseudoExtractiveLabels(doc, gold);
    doc.push_back("zzqx unrelated qqwv tokens only");
    auto after = PseudoExtractiveLabels(doc, gold);
    for (size_t idx : before) EXPECT_TRUE(after.count(idx));
  }
}

}  // namespace
}  // namespace veridict::extractive
