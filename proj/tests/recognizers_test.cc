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

#include "veridict/recognizers.h"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_support.h"

namespace veridict::recognizers {
namespace {

std::vector<std::string> Surfaces(const std::vector<EntityMention> &ms) {
  std::vector<std::string> out;
  for (const auto &m : ms) out.push_back(m.surface);
  return out;
}

std::set<std::string> Canonicals(const std::vector<EntityMention> &ms) {
  std::set<std::string> out;
  for (const auto &m : ms) out.insert(m.canonical);
  return out;
}

bool Contains(const std::vector<std::string> &v, const std::string &s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

TEST(BuiltinRecognizer, JudgeNameAcrossComma) {
  BuiltinRecognizer r;
  auto ms = Surfaces(r.ExtractEntities("the Honorable Aiyar, N. Chandrasekhara entered"));
  EXPECT_TRUE(Contains(ms, "Aiyar, N. Chandrasekhara"));
}

TEST(BuiltinRecognizer, HonorificIsNotPartOfTheName) {
  BuiltinRecognizer r;
  auto ms = Surfaces(r.ExtractEntities(
      "On February 1, 2020, the Honorable Chandrasekhar A. Lama of India entered a "
      "final judgment against W.H. King."));
  EXPECT_TRUE(Contains(ms, "Chandrasekhar A. Lama"));
  EXPECT_TRUE(Contains(ms, "India"));
  EXPECT_TRUE(Contains(ms, "W.H. King"));
}

TEST(BuiltinRecognizer, LowercaseTextHasNoEntities) {
  BuiltinRecognizer r;
  EXPECT_TRUE(r.ExtractEntities("").empty());
  EXPECT_TRUE(r.ExtractEntities("the quick brown fox").empty());
}

TEST(BuiltinRecognizer, SentenceInitialWordAlone) {
  BuiltinRecognizer r;
  EXPECT_TRUE(r.ExtractEntities("However the appeal failed.").empty());
  auto ms = Surfaces(r.ExtractEntities("Mr. Setalvad argued. CBI appealed."));
  EXPECT_TRUE(Contains(ms, "Setalvad"));
  EXPECT_TRUE(Contains(ms, "CBI"));
}

TEST(BuiltinRecognizer, LeadingFunctionWordStripped) {
  BuiltinRecognizer r;
  auto ms = Surfaces(r.ExtractEntities("He appealed to The High Court of Madras yesterday."));
  EXPECT_TRUE(Contains(ms, "High Court of Madras") || Contains(ms, "High Court"));
  for (const auto &m : ms) EXPECT_NE(m.rfind("The ", 0), 0u) << m;
}

TEST(ExtractNumbers, CurrencyAndSections) {
  BuiltinRecognizer r;
  auto ms = r.ExtractNumbers("Rs 29,500 under Section 387");
  EXPECT_EQ(Canonicals(ms), (std::set<std::string>{"29500", "387"}));
  EXPECT_TRUE(r.ExtractNumbers("no numerals here").empty());
  auto dec = r.ExtractNumbers("3.5 per cent");
  ASSERT_EQ(dec.size(), 1u);
  EXPECT_EQ(dec[0].canonical, "3.5");
}

TEST(ExtractNumbers, IndianGroupingAndTrailingPeriod) {
  BuiltinRecognizer r;
  auto ms = r.ExtractNumbers("He paid Rs. 4,75,000. Then 1955.");
  EXPECT_EQ(Canonicals(ms), (std::set<std::string>{"475000", "1955"}));
  for (const auto &m : ms) EXPECT_NE(m.surface.back(), '.');
}

TEST(NumericCore, SkipsCurrencyMarker) {
  std::string s = "Rs. 26,500";
  auto [b, e] = NumericCore(s);
  EXPECT_EQ(s.substr(b, e - b), "26,500");
  EXPECT_EQ(CanonicalNumber("Rs.29,500"), "29500");
}

TEST(Mentions, SurfacesMatchSpansAndAreDeterministic) {
  BuiltinRecognizer r;
  std::mt19937 rng(2);
  for (int i = 0; i < 300; ++i) {
    std::string text = testing::RandomText(rng, 5 + i % 60);
    auto ms = r.ExtractAll(text);
    EXPECT_EQ(ms, r.ExtractAll(text));
    size_t prev = 0;
    for (const auto &m : ms) {
      EXPECT_GE(m.start, prev);
      prev = m.start;
      EXPECT_EQ(text.substr(m.start, m.end - m.start), m.surface);
      EXPECT_FALSE(m.canonical.empty());
    }
  }
}

TEST(Mentions, CommuteWithBlankLineConcatenation) {
  BuiltinRecognizer r;
  std::mt19937 rng(8);
  for (int i = 0; i < 200; ++i) {
    std::string a = testing::RandomText(rng, 3 + i % 30);
    std::string b = testing::RandomText(rng, 3 + (i * 7) % 30);
    std::string joined = a + "\n\n" + b;
    auto ma = r.ExtractAll(a);
    auto mb = r.ExtractAll(b);
    for (auto &m : mb) {
      m.start += a.size() + 2;
      m.end += a.size() + 2;
    }
    ma.insert(ma.end(), mb.begin(), mb.end());
    EXPECT_EQ(r.ExtractAll(joined), ma) << joined;
  }
}

TEST(Identity, FoldsCaseAndKind) {
  EntityMention a{"MADRAS", MentionKind::kNamedEntity, 0, 6, "MADRAS"};
  EntityMention b{"Madras", MentionKind::kNamedEntity, 0, 6, "Madras"};
  EntityMention n{"12", MentionKind::kNumber, 0, 2, "12"};
  EntityMention e{"12", MentionKind::kNamedEntity, 0, 2, "12"};
  EXPECT_EQ(a.Identity(), b.Identity());
  EXPECT_NE(n.Identity(), e.Identity());
}

TEST(ContainsDate, Forms) {
  EXPECT_TRUE(ContainsDate("decided on 25 June 1954 at Lucknow"));
  EXPECT_TRUE(ContainsDate("On February 1, 2020, the court"));
  EXPECT_TRUE(ContainsDate("dated 12/03/1951"));
  EXPECT_FALSE(ContainsDate("a sum of Rs. 500 was paid"));
}

TEST(CodePointToByteOffset, MultiByte) {
  std::string s = "é a ₹";
  EXPECT_EQ(CodePointToByteOffset(s, 0), 0u);
  EXPECT_EQ(CodePointToByteOffset(s, 1), 2u);
  EXPECT_EQ(CodePointToByteOffset(s, 4), 5u);
  EXPECT_EQ(CodePointToByteOffset(s, 5), s.size());
}

}  // namespace
}  // namespace veridict::recognizers
