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

#ifndef VERIDICT_TEXTPROC_H_
#define VERIDICT_TEXTPROC_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace veridict::text {

// Returns the Unicode NFC form of a UTF-8 string. Invalid UTF-8 sequences are
// replaced with U+FFFD.
std::string NormalizeNfc(std::string_view text);

// Replaces invalid UTF-8 byte sequences with U+FFFD without normalizing.
std::string SanitizeUtf8(std::string_view bytes);

// Full Unicode case folding (ASCII fast path).
std::string FoldCase(std::string_view text);

// Whitespace test for the code point starting at text[pos]. Sets *length to
// the byte length of the whitespace code point when it returns true.
bool IsSpaceAt(std::string_view text, size_t pos, size_t *length);

// Byte range [start, end) of a maximal non-whitespace run.
struct TokenSpan {
  size_t start = 0;
  size_t end = 0;
};

std::vector<TokenSpan> TokenSpans(std::string_view text);

// Whitespace word tokens of NFC(text).
std::vector<std::string> TokenizeWords(std::string_view text);

// Number of whitespace tokens. NFC never adds or removes whitespace, so this
// equals TokenizeWords(text).size() without the normalization cost.
size_t CountWords(std::string_view text);

// Tokens that never end a sentence even though they end with a period.
// Single capital initials ("A.") and dotted initialisms ("W.H.") are always
// treated as non-terminating in addition to the listed tokens.
class AbbreviationList {
 public:
  // Mr., Mrs., Dr., Hon., v., vs., No., Rs., Sec., Art., Cl.
  static const AbbreviationList &Default();

  // One token per line; blank lines and lines starting with '#' are skipped.
  // Throws IoError when the file cannot be read.
  static AbbreviationList LoadFromFile(const std::string &path);

  explicit AbbreviationList(const std::vector<std::string> &tokens);

  bool Contains(std::string_view token) const;

 private:
  std::set<std::string> folded_;
};

// "A." or dotted initialisms such as "W.H." and "U.S.".
bool IsInitialism(std::string_view token);

// True if the token ends a sentence: it ends in '.', '!' or '?' (possibly
// followed by closing quotes or brackets) and is not an abbreviation.
bool EndsSentence(std::string_view token, const AbbreviationList &abbrevs);

// A whitespace token with its sentence position. Sentence boundaries depend
// only on the token itself and the whitespace gap before the next token, so
// segmenting a verbatim excerpt reproduces the excerpt's own boundaries.
struct Token {
  size_t start = 0;
  size_t end = 0;
  bool sentence_initial = false;
  bool sentence_final = false;
};

std::vector<Token> AnnotateTokens(
    std::string_view text,
    const AbbreviationList &abbrevs = AbbreviationList::Default());

struct SentenceSpan {
  size_t start = 0;
  size_t end = 0;
  size_t index = 0;
};

// Splits on sentence-final tokens and on blank lines.
std::vector<SentenceSpan> SplitSentences(
    std::string_view text,
    const AbbreviationList &abbrevs = AbbreviationList::Default());

// Convenience: the sentence texts themselves.
std::vector<std::string> SentenceTexts(
    std::string_view text,
    const AbbreviationList &abbrevs = AbbreviationList::Default());

using Ngram = std::vector<std::string>;
using NgramCounts = std::map<Ngram, size_t>;

// Sliding-window n-grams of case-folded tokens, with multiplicity.
NgramCounts Ngrams(const std::vector<std::string> &tokens, size_t n);

// Case-folded whitespace tokens, the unit all overlap metrics work on.
std::vector<std::string> MetricTokens(std::string_view text);

// One token is about 3/4 of a word: round(0.75 * tokens).
int64_t WordsFromTokens(int64_t token_count);

// Inverse direction used for max_tokens: ceil(words / 0.75).
int64_t TokensForWords(int64_t word_count);

}  // namespace veridict::text

#endif  // VERIDICT_TEXTPROC_H_
