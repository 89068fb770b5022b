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

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <cmath>
#include <fstream>

#include "veridict/errors.h"

namespace veridict::text {

namespace {

bool IsAscii(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

// Decodes the code point at s[pos]. Invalid sequences decode to U+FFFD with
// length 1.
char32_t DecodeAt(std::string_view s, size_t pos, size_t *length) {
  auto byte = [&](size_t i) { return static_cast<unsigned char>(s[i]); };
  unsigned char c = byte(pos);
  *length = 1;
  if (c < 0x80) return c;
  size_t n = 0;
  char32_t cp = 0;
  if ((c & 0xE0) == 0xC0) {
    n = 2;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    n = 3;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    n = 4;
    cp = c & 0x07;
  } else {
    return 0xFFFD;
  }
  if (pos + n > s.size()) return 0xFFFD;
  for (size_t i = 1; i < n; ++i) {
    unsigned char cc = byte(pos + i);
    if ((cc & 0xC0) != 0x80) return 0xFFFD;
    cp = (cp << 6) | (cc & 0x3F);
  }
  *length = n;
  return cp;
}

bool IsSpaceCodePoint(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\v': case '\f': case '\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

std::string ToUtf8(const icu::UnicodeString &u) {
  std::string out;
  u.toUTF8String(out);
  return out;
}

// Strips trailing closing punctuation (quotes, brackets) from a token.
std::string_view StripClosers(std::string_view t) {
  static constexpr std::string_view kClosers[] = {
      ")", "]", "}", "\"", "'", "\xE2\x80\x9D" /* ” */, "\xE2\x80\x99" /* ’ */,
      "\xC2\xBB" /* » */};
  bool changed = true;
  while (changed && !t.empty()) {
    changed = false;
    for (std::string_view c : kClosers) {
      if (t.size() >= c.size() && t.substr(t.size() - c.size()) == c) {
        t.remove_suffix(c.size());
        changed = true;
        break;
      }
    }
  }
  return t;
}

std::string_view StripOpeners(std::string_view t) {
  static constexpr std::string_view kOpeners[] = {
      "(", "[", "{", "\"", "'", "\xE2\x80\x9C" /* “ */, "\xE2\x80\x98" /* ‘ */,
      "\xC2\xAB" /* « */};
  bool changed = true;
  while (changed && !t.empty()) {
    changed = false;
    for (std::string_view c : kOpeners) {
      if (t.size() >= c.size() && t.substr(0, c.size()) == c) {
        t.remove_prefix(c.size());
        changed = true;
        break;
      }
    }
  }
  return t;
}

bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsAlpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }

bool GapHasBlankLine(std::string_view gap) {
  return std::count(gap.begin(), gap.end(), '\n') >= 2;
}

}  // namespace

bool IsInitialism(std::string_view core) {
  if (core.size() == 2) return IsUpper(core[0]) && core[1] == '.';
  if (core.size() < 4 || core.size() % 2 != 0) return false;
  for (size_t i = 0; i < core.size(); i += 2) {
    if (!IsAlpha(core[i]) || core[i + 1] != '.') return false;
  }
  return true;
}

std::string SanitizeUtf8(std::string_view bytes) {
  if (IsAscii(bytes)) return std::string(bytes);
  return ToUtf8(icu::UnicodeString::fromUTF8(
      icu::StringPiece(bytes.data(), static_cast<int32_t>(bytes.size()))));
}

std::string NormalizeNfc(std::string_view text) {
  if (IsAscii(text)) return std::string(text);
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString out = nfc->normalize(in, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  return ToUtf8(out);
}

std::string FoldCase(std::string_view text) {
  if (IsAscii(text)) {
    std::string out(text);
    for (char &c : out) {
      if (IsUpper(c)) c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  u.foldCase();
  return ToUtf8(u);
}

bool IsSpaceAt(std::string_view text, size_t pos, size_t *length) {
  char32_t cp = DecodeAt(text, pos, length);
  return IsSpaceCodePoint(cp);
}

std::vector<TokenSpan> TokenSpans(std::string_view text) {
  std::vector<TokenSpan> spans;
  size_t pos = 0;
  bool in_token = false;
  size_t start = 0;
  while (pos < text.size()) {
    size_t len = 1;
    bool space = IsSpaceAt(text, pos, &len);
    if (space && in_token) {
      spans.push_back({start, pos});
      in_token = false;
    } else if (!space && !in_token) {
      start = pos;
      in_token = true;
    }
    pos += len;
  }
  if (in_token) spans.push_back({start, text.size()});
  return spans;
}

std::vector<std::string> TokenizeWords(std::string_view text) {
  std::string normalized = NormalizeNfc(text);
  std::vector<std::string> tokens;
  for (const TokenSpan &s : TokenSpans(normalized)) {
    tokens.emplace_back(normalized.substr(s.start, s.end - s.start));
  }
  return tokens;
}

size_t CountWords(std::string_view text) { return TokenSpans(text).size(); }

const AbbreviationList &AbbreviationList::Default() {
  static const AbbreviationList kDefault({"Mr.", "Mrs.", "Dr.", "Hon.", "v.",
                                          "vs.", "No.", "Rs.", "Sec.", "Art.",
                                          "Cl."});
  return kDefault;
}

AbbreviationList AbbreviationList::LoadFromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot read abbreviation list");
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto spans = TokenSpans(line);
    if (spans.empty()) continue;
    std::string token = line.substr(spans[0].start, spans[0].end - spans[0].start);
    if (token[0] == '#') continue;
    tokens.push_back(token);
  }
  return AbbreviationList(tokens);
}

AbbreviationList::AbbreviationList(const std::vector<std::string> &tokens) {
  for (const std::string &t : tokens) folded_.insert(FoldCase(t));
}

bool AbbreviationList::Contains(std::string_view token) const {
  return folded_.count(FoldCase(token)) > 0;
}

bool EndsSentence(std::string_view token, const AbbreviationList &abbrevs) {
  std::string_view t = StripClosers(token);
  if (t.empty()) return false;
  char last = t.back();
  if (last == '!' || last == '?') return true;
  if (last != '.') return false;
  std::string_view core = StripOpeners(t);
  if (abbrevs.Contains(core)) return false;
  if (IsInitialism(core)) return false;
  return true;
}

std::vector<Token> AnnotateTokens(std::string_view text,
                                  const AbbreviationList &abbrevs) {
  std::vector<TokenSpan> spans = TokenSpans(text);
  std::vector<Token> tokens(spans.size());
  for (size_t i = 0; i < spans.size(); ++i) {
    Token &tok = tokens[i];
    tok.start = spans[i].start;
    tok.end = spans[i].end;
    tok.sentence_initial = (i == 0) || tokens[i - 1].sentence_final;
    bool last = i + 1 == spans.size();
    tok.sentence_final =
        last ||
        EndsSentence(text.substr(tok.start, tok.end - tok.start), abbrevs) ||
        GapHasBlankLine(text.substr(tok.end, spans[i + 1].start - tok.end));
  }
  return tokens;
}

std::vector<SentenceSpan> SplitSentences(std::string_view text,
                                         const AbbreviationList &abbrevs) {
  std::vector<SentenceSpan> sentences;
  size_t start = 0;
  for (const Token &tok : AnnotateTokens(text, abbrevs)) {
    if (tok.sentence_initial) start = tok.start;
    if (tok.sentence_final) {
      sentences.push_back({start, tok.end, sentences.size()});
    }
  }
  return sentences;
}

std::vector<std::string> SentenceTexts(std::string_view text,
                                       const AbbreviationList &abbrevs) {
  std::vector<std::string> out;
  for (const SentenceSpan &s : SplitSentences(text, abbrevs)) {
    out.emplace_back(text.substr(s.start, s.end - s.start));
  }
  return out;
}

NgramCounts Ngrams(const std::vector<std::string> &tokens, size_t n) {
  NgramCounts counts;
  if (n == 0) throw InvalidArgument("n-gram order must be >= 1");
  if (tokens.size() < n) return counts;
  std::vector<std::string> folded;
  folded.reserve(tokens.size());
  for (const auto &t : tokens) folded.push_back(FoldCase(t));
  for (size_t i = 0; i + n <= folded.size(); ++i) {
    ++counts[Ngram(folded.begin() + i, folded.begin() + i + n)];
  }
  return counts;
}

std::vector<std::string> MetricTokens(std::string_view text) {
  std::vector<std::string> tokens = TokenizeWords(text);
  for (auto &t : tokens) t = FoldCase(t);
  return tokens;
}

int64_t WordsFromTokens(int64_t token_count) {
  return std::llround(0.75 * static_cast<double>(token_count));
}

int64_t TokensForWords(int64_t word_count) {
  // ceil(w / 0.75) == ceil(4w / 3), done in integers to avoid 0.75 drift.
  return (4 * word_count + 2) / 3;
}

}  // namespace veridict::text
