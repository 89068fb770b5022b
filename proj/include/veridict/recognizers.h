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

#ifndef VERIDICT_RECOGNIZERS_H_
#define VERIDICT_RECOGNIZERS_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "veridict/sidecar_client.h"
#include "veridict/textproc.h"

namespace veridict::recognizers {

enum class MentionKind { kNamedEntity, kNumber };

std::string_view MentionKindName(MentionKind kind);

// A named entity or number occurrence. `surface` is exactly
// text[start, end) of the text it was extracted from.
struct EntityMention {
  std::string surface;
  MentionKind kind = MentionKind::kNamedEntity;
  size_t start = 0;
  size_t end = 0;
  std::string canonical;

  // Set identity: kind plus case-folded canonical form.
  std::string Identity() const;

  bool operator==(const EntityMention &other) const = default;
};

// Digits of a number mention without separators or currency: "Rs.29,500"
// -> "29500". Decimal points are kept when there is exactly one; dotted or
// slashed dates keep their separators.
std::string CanonicalNumber(std::string_view surface);

// Byte range of the numeric part of a number mention's surface (the
// surface minus any attached currency marker).
std::pair<size_t, size_t> NumericCore(std::string_view surface);

class Recognizer {
 public:
  virtual ~Recognizer() = default;
  virtual std::vector<EntityMention> ExtractEntities(std::string_view text) const = 0;
  virtual std::vector<EntityMention> ExtractNumbers(std::string_view text) const;

  // Entities and numbers ordered by start offset.
  std::vector<EntityMention> ExtractAll(std::string_view text) const;
};

// Deterministic rule recognizer:
//  - maximal runs of capitalized tokens within a sentence,
//  - leading function words ("The", "In", ...) and honorifics ("Mr.",
//    "Honorable", ...) are not part of a mention,
//  - a run that is only the sentence-initial word is dropped unless it is an
//    acronym or follows an honorific,
//  - "Surname, I. Name" style names are joined across the comma.
class BuiltinRecognizer : public Recognizer {
 public:
  explicit BuiltinRecognizer(
      const text::AbbreviationList &abbrevs = text::AbbreviationList::Default());

  std::vector<EntityMention> ExtractEntities(std::string_view text) const override;

 private:
  const text::AbbreviationList &abbrevs_;
};

// Named entities from the sidecar /ner endpoint; numbers still come from
// the builtin rules. Responses are cached per text.
class RemoteRecognizer : public Recognizer {
 public:
  explicit RemoteRecognizer(std::shared_ptr<const SidecarClient> client);

  std::vector<EntityMention> ExtractEntities(std::string_view text) const override;

 private:
  std::shared_ptr<const SidecarClient> client_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::vector<EntityMention>> cache_;
};

// Converts a code point offset into a byte offset of a UTF-8 string.
size_t CodePointToByteOffset(std::string_view text, size_t code_points);

// True if the text mentions a calendar date (month name next to a number,
// or a numeric d/m/y date).
bool ContainsDate(std::string_view text);

}  // namespace veridict::recognizers

#endif  // VERIDICT_RECOGNIZERS_H_
