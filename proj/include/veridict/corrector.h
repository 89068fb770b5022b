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

#ifndef VERIDICT_CORRECTOR_H_
#define VERIDICT_CORRECTOR_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "veridict/embedding.h"
#include "veridict/recognizers.h"

namespace veridict::corrector {

using recognizers::EntityMention;

// Distinct mentions by identity, each represented by its first occurrence.
struct EntitySets {
  std::vector<EntityMention> v_j;  // document
  std::vector<EntityMention> v_s;  // summary
  std::vector<EntityMention> v_r;  // v_s minus v_j
};

EntitySets ComputeEntitySets(std::string_view document, std::string_view summary,
                             const recognizers::Recognizer &recognizer);

using Span = std::pair<size_t, size_t>;

struct Replacement {
  EntityMention original;
  EntityMention replacement;
  double similarity = 0.0;
  // Byte ranges of the input summary that were rewritten.
  std::vector<Span> spans_rewritten;
};

struct Unrepairable {
  EntityMention original;
  std::string reason;
};

struct ReplacementLedger {
  std::vector<Replacement> entries;
  std::vector<Unrepairable> warnings;

  bool empty() const { return entries.empty() && warnings.empty(); }
};

struct Correction {
  std::string text;
  ReplacementLedger ledger;
};

// Replaces every occurrence of each v_r element with the most cosine-similar
// v_j element. Numbers only map to numbers; a number keeps its currency
// marker and only its digits are rewritten. Ties go to the earliest document
// mention. Elements without a permissible candidate are reported as
// warnings and left untouched.
Correction CorrectSummary(std::string_view document, std::string_view summary,
                          const recognizers::Recognizer &recognizer,
                          const embedding::Embedder &embedder);

nlohmann::ordered_json LedgerToJson(const ReplacementLedger &ledger);

}  // namespace veridict::corrector

#endif  // VERIDICT_CORRECTOR_H_
