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

#include "veridict/textproc.h"

#include <random>

#include <gtest/gtest.h>

#include "test_support.h"
#include "veridict/errors.h"

namespace veridict::text {
namespace {

std::vector<std::string> Texts(std::string_view s) { return SentenceTexts(s); }

TEST(SplitSentences, InitialsDoNotEndSentences) {
  auto s = Texts("A. B. King filed suit. The court agreed.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], "A. B. King filed suit.");
  EXPECT_EQ(s[1], "The court agreed.");
}

TEST(SplitSentences, EmptyAndUnterminated) {
  EXPECT_TRUE(SplitSentences("").empty());
  EXPECT_TRUE(SplitSentences("   \n\t ").empty());
  auto s = Texts("One sentence without terminator");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], "One sentence without terminator");
}

TEST(SplitSentences, LegalAbbreviations) {
  auto s = Texts("Mr. Setalvad relied on Sec. 4 of the Act. He paid Rs. 500 in No. 12 "
                 "of 1950. Ram v. State was cited.");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[1], "He paid Rs. 500 in No. 12 of 1950.");
}

TEST(SplitSentences, BlankLineIsABoundary) {
  auto s = Texts("FACTS\n\nThe appellant sued");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], "FACTS");
}

TEST(SplitSentences, QuestionAndQuotedTerminators) {
  auto s = Texts("Is it valid? He said \"never.\" Then left!");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[1], "He said \"never.\"");
}

TEST(SplitSentences, SpansAreOrderedAndCoverAllTokens) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    std::string text = testing::RandomText(rng, 5 + iter % 80);
    auto spans = SplitSentences(text);
    size_t prev_end = 0;
    std::string covered;
    for (size_t i = 0; i < spans.size(); ++i) {
      EXPECT_EQ(spans[i].index, i);
      EXPECT_LT(spans[i].start, spans[i].end);
      EXPECT_LE(spans[i].end, text.size());
      EXPECT_GE(spans[i].start, prev_end);
      prev_end = spans[i].end;
      if (!covered.empty()) covered += ' ';
      covered += text.substr(spans[i].start, spans[i].end - spans[i].start);
    }
    EXPECT_EQ(TokenizeWords(covered), TokenizeWords(text));
  }
}

TEST(SplitSentences, VerbatimExcerptKeepsItsBoundaries) {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    std::string text = testing::RandomText(rng, 60);
    auto sentences = Texts(text);
    std::string excerpt;
    for (size_t i = 0; i < sentences.size(); i += 2) {
      if (!excerpt.empty()) excerpt += "\n\n";
      excerpt += sentences[i];
    }
    auto again = Texts(excerpt);
    for (const auto &s : again) {
      EXPECT_NE(std::find(sentences.begin(), sentences.end(), s), sentences.end()) << s;
    }
  }
}

TEST(AbbreviationList, LoadsFromFile) {
  testing::TempDir dir;
  testing::WriteFile(dir.File("abbr.txt"), "# legal\nCorp.\n\nLtd.\n");
  AbbreviationList list = AbbreviationList::LoadFromFile(dir.File("abbr.txt"));
  EXPECT_TRUE(list.Contains("Corp."));
  EXPECT_TRUE(list.Contains("ltd."));
  EXPECT_FALSE(list.Contains("Mr."));
  auto s = SentenceTexts("Dalmia Corp. won. It paid.", list);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_THROW(AbbreviationList::LoadFromFile(dir.File("missing.txt")), IoError);
}

TEST(IsInitialism, Forms) {
  EXPECT_TRUE(IsInitialism("A."));
  EXPECT_TRUE(IsInitialism("W.H."));
  EXPECT_TRUE(IsInitialism("U.S."));
  EXPECT_FALSE(IsInitialism("suit."));
  EXPECT_FALSE(IsInitialism("a"));
}

TEST(TokenizeWords, WhitespaceSplit) {
  EXPECT_EQ(TokenizeWords("Rs. 29,500 due"),
            (std::vector<std::string>{"Rs.", "29,500", "due"}));
  EXPECT_TRUE(TokenizeWords("").empty());
  EXPECT_EQ(TokenizeWords("a  b"), (std::vector<std::string>{"a", "b"}));
  // No-break space and ideographic space are whitespace too.
  EXPECT_EQ(TokenizeWords("a\xC2\xA0" "b\xE3\x80\x80" "c"),
            (std::vector<std::string>{"a", "b", "c"}));
}

TEST(TokenizeWords, RejoinIsAFixpoint) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::string text = testing::RandomText(rng, 1 + i % 40);
    auto tokens = TokenizeWords(text);
    std::string joined;
    for (const auto &t : tokens) joined += (joined.empty() ? "" : " ") + t;
    EXPECT_EQ(TokenizeWords(joined), tokens);
    EXPECT_EQ(CountWords(text), tokens.size());
  }
}

TEST(Normalization, NfcComposesAndRepairsBytes) {
  // "e" + combining acute -> precomposed e-acute.
  EXPECT_EQ(NormalizeNfc("caf" "e\xCC\x81"), "caf\xC3\xA9");
  EXPECT_EQ(SanitizeUtf8("a\xFF" "b"), "a\xEF\xBF\xBD" "b");
  EXPECT_EQ(FoldCase("ÉCOLE Court"), "école court");
}

TEST(Ngrams, SlidingWindowWithMultiplicity) {
  NgramCounts bi = Ngrams({"a", "b", "c"}, 2);
  EXPECT_EQ(bi.size(), 2u);
  EXPECT_EQ((bi[{"a", "b"}]), 1u);
  EXPECT_TRUE(Ngrams({"a"}, 2).empty());
  NgramCounts aa = Ngrams({"a", "a", "a"}, 2);
  EXPECT_EQ(aa.size(), 1u);
  EXPECT_EQ((aa[{"a", "a"}]), 2u);
  EXPECT_EQ((Ngrams({"A", "b"}, 2)[{"a", "b"}]), 1u);
  EXPECT_THROW(Ngrams({"a"}, 0), InvalidArgument);
}

TEST(Ngrams, CountMatchesLength) {
  std::mt19937 rng(9);
  for (int i = 0; i < 300; ++i) {
    size_t len = i % 12;
    size_t n = 1 + i % 4;
    auto tokens = MetricTokens(testing::RandomTokens(rng, len, {"a", "b", "c"}));
    size_t total = 0;
    for (const auto &[g, c] : Ngrams(tokens, n)) total += c;
    EXPECT_EQ(total, len >= n ? len - n + 1 : 0);
  }
}

TEST(TokenEstimates, ThreeQuartersRule) {
  EXPECT_EQ(WordsFromTokens(1000), 750);
  EXPECT_EQ(WordsFromTokens(0), 0);
  EXPECT_EQ(WordsFromTokens(4096), 3072);
  EXPECT_EQ(TokensForWords(200), 267);
  EXPECT_EQ(TokensForWords(750), 1000);
  for (int64_t w = 0; w < 2000; ++w) {
    EXPECT_GE(WordsFromTokens(TokensForWords(w)), w);
  }
}

}  // namespace
}  // namespace veridict::text
