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

#include "veridict/stemmer.h"

#include <gtest/gtest.h>

namespace veridict::text {
namespace {

TEST(PorterStem, ReferenceExamples) {
  const std::pair<const char *, const char *> cases[] = {
      {"caresses", "caress"}, {"ponies", "poni"},       {"ties", "ti"},
      {"caress", "caress"},   {"cats", "cat"},          {"feed", "feed"},
      {"agreed", "agre"},     {"plastered", "plaster"}, {"motoring", "motor"},
      {"sing", "sing"},       {"conflated", "conflat"}, {"hopping", "hop"},
      {"filing", "file"},     {"happy", "happi"},       {"relational", "relat"},
      {"conditional", "condit"}, {"valenci", "valenc"}, {"digitizer", "digit"},
      {"triplicate", "triplic"}, {"hopeful", "hope"},   {"adjustable", "adjust"},
      {"effective", "effect"}, {"probate", "probat"},   {"controll", "control"},
      {"generalization", "gener"}, {"judgements", "judgement"}, {"courts", "court"},
  };
  for (auto [word, stem] : cases) EXPECT_EQ(PorterStem(word), stem) << word;
}

TEST(PorterStem, ShortAndNonAlphabeticWordsUnchanged) {
  EXPECT_EQ(PorterStem("is"), "is");
  EXPECT_EQ(PorterStem("29,500"), "29,500");
  EXPECT_EQ(PorterStem(""), "");
}

}  // namespace
}  // namespace veridict::text
