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

#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <regex>
#include <set>

#include "veridict/errors.h"

namespace veridict::recognizers {

namespace {

const std::set<std::string> &Honorifics() {
  static const std::set<std::string> kSet = {
      "mr",      "mr.",   "mrs",   "mrs.",    "ms",     "ms.",   "dr",
      "dr.",     "hon",   "hon.",  "hon'ble", "honorable", "honourable",
      "justice", "shri",  "shri.", "sri",     "smt",    "smt.",  "judge",
      "lord",    "lady",  "sir",   "dame",    "mister", "madam", "messrs.",
      "prof.",   "prof",  "kumari", "km.",    "m/s",    "m/s."};
  return kSet;
}

// Currency words; they belong to amounts, not names.
bool IsCurrencyWord(const std::string &folded) {
  static const std::set<std::string> kSet = {"rs", "rs.", "inr", "usd", "us$", "rupees"};
  return kSet.count(folded) > 0;
}

// Capitalized words that start a run but are not part of a name.
const std::set<std::string> &FunctionWords() {
  static const std::set<std::string> kSet = {
      "a", "accordingly", "after", "all", "also", "although", "an", "and",
      "any", "as", "at", "because", "before", "both", "but", "by", "each",
      "every", "finally", "first", "for", "from", "further", "he", "hence",
      "her", "here", "his", "however", "if", "in", "it", "its", "moreover",
      "my", "no", "not", "now", "of", "on", "one", "or", "our", "second",
      "she", "since", "so", "some", "such", "that", "the", "their", "then",
      "there", "these", "they", "this", "those", "though", "thus", "to",
      "under", "upon", "we", "what", "when", "where", "whereas", "which",
      "while", "who", "with", "yes", "you", "your"};
  return kSet;
}

bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool StartsUppercase(std::string_view s) {
  if (s.empty()) return false;
  unsigned char c = static_cast<unsigned char>(s[0]);
  if (c < 0x80) return IsAsciiUpper(static_cast<char>(c));
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(std::min<size_t>(s.size(), 4))));
  return u_isupper(u.char32At(0));
}

// All-caps word of at least two letters, e.g. "IPC" or "GAO".
bool IsAcronym(std::string_view core) {
  size_t letters = 0;
  for (char c : core) {
    if (IsAsciiLower(c)) return false;
    if (IsAsciiUpper(c)) ++letters;
    else if (!IsDigit(c) && c != '.' && c != '&') return false;
  }
  return letters >= 2;
}

bool MatchPrefix(std::string_view s, size_t pos, std::string_view p) {
  return s.size() - pos >= p.size() && s.substr(pos, p.size()) == p;
}

// Leading characters that open a token but are not part of a word.
size_t OpenerLength(std::string_view s, size_t pos) {
  static constexpr std::string_view kOpen[] = {
      "(", "[", "{", "\"", "'", "\xE2\x80\x9C", "\xE2\x80\x98", "\xC2\xAB"};
  for (std::string_view o : kOpen) {
    if (MatchPrefix(s, pos, o)) return o.size();
  }
  return 0;
}

// Trailing characters that close a token but are not part of a word.
size_t CloserLength(std::string_view s, size_t end) {
  static constexpr std::string_view kClose[] = {
      ")", "]", "}", "\"", "'", ",", ";", ":", "!", "?",
      "\xE2\x80\x9D", "\xE2\x80\x99", "\xC2\xBB"};
  for (std::string_view c : kClose) {
    if (end >= c.size() && s.substr(end - c.size(), c.size()) == c) return c.size();
  }
  return 0;
}

struct WordToken {
  size_t core_begin = 0;
  size_t core_end = 0;
  bool sentence_initial = false;
  bool sentence_final = false;
  bool breaks_before = false;
  bool breaks_after = false;
  bool comma_only = false;  // the only trailing punctuation was ","
  std::string_view core;
};

WordToken MakeWordToken(std::string_view text, const text::Token &tok,
                        const text::AbbreviationList &abbrevs) {
  WordToken w;
  w.sentence_initial = tok.sentence_initial;
  w.sentence_final = tok.sentence_final;
  size_t b = tok.start;
  size_t e = tok.end;
  while (b < e) {
    size_t n = OpenerLength(text, b);
    if (n == 0) break;
    b += n;
    w.breaks_before = true;
  }
  std::string trailing;
  bool changed = true;
  while (changed && e > b) {
    changed = false;
    size_t n = CloserLength(text, e);
    if (n > 0) {
      trailing.insert(0, text.substr(e - n, n));
      e -= n;
      changed = true;
      continue;
    }
    if (text[e - 1] == '.') {
      std::string_view core = text.substr(b, e - b);
      if (!abbrevs.Contains(core) && !text::IsInitialism(core) &&
          !Honorifics().count(text::FoldCase(core))) {
        trailing.insert(0, ".");
        --e;
        changed = true;
      }
    }
  }
  w.core_begin = b;
  w.core_end = e;
  w.core = text.substr(b, e - b);
  w.breaks_after = !trailing.empty();
  w.comma_only = trailing == ",";
  return w;
}

}  // namespace

std::string_view MentionKindName(MentionKind kind) {
  return kind == MentionKind::kNumber ? "number" : "named_entity";
}

std::string EntityMention::Identity() const {
  std::string id(MentionKindName(kind));
  id += ':';
  id += text::FoldCase(canonical);
  return id;
}

std::pair<size_t, size_t> NumericCore(std::string_view surface) {
  size_t b = 0;
  while (b < surface.size() && !IsDigit(surface[b])) ++b;
  size_t e = surface.size();
  while (e > b && !IsDigit(surface[e - 1])) --e;
  return {b, e};
}

std::string CanonicalNumber(std::string_view surface) {
  auto [b, e] = NumericCore(surface);
  std::string out;
  for (size_t i = b; i < e; ++i) {
    if (surface[i] != ',') out += surface[i];
  }
  return out;
}

std::vector<EntityMention> Recognizer::ExtractNumbers(std::string_view text) const {
  // Currency markers that may be glued to the digits ("Rs.500", "$20").
  static constexpr std::string_view kCurrency[] = {
      "US$", "USD", "INR", "Rs.", "Rs", "$", "\xE2\x82\xB9" /* ₹ */,
      "\xC2\xA3" /* £ */, "\xE2\x82\xAC" /* € */};
  std::vector<EntityMention> out;
  size_t i = 0;
  while (i < text.size()) {
    if (!IsDigit(text[i])) {
      ++i;
      continue;
    }
    size_t start = i;
    size_t end = i;
    while (end < text.size() && IsDigit(text[end])) ++end;
    while (end + 1 < text.size() &&
           (text[end] == ',' || text[end] == '.' || text[end] == '/') &&
           IsDigit(text[end + 1])) {
      ++end;
      while (end < text.size() && IsDigit(text[end])) ++end;
    }
    size_t surface_start = start;
    for (std::string_view c : kCurrency) {
      if (start >= c.size() && text.substr(start - c.size(), c.size()) == c) {
        size_t cs = start - c.size();
        char before = cs > 0 ? text[cs - 1] : ' ';
        if (!IsAsciiUpper(before) && !IsAsciiLower(before) && !IsDigit(before)) {
          surface_start = cs;
          break;
        }
      }
    }
    EntityMention m;
    m.kind = MentionKind::kNumber;
    m.start = surface_start;
    m.end = end;
    m.surface = std::string(text.substr(surface_start, end - surface_start));
    m.canonical = CanonicalNumber(m.surface);
    out.push_back(std::move(m));
    i = end;
  }
  return out;
}

std::vector<EntityMention> Recognizer::ExtractAll(std::string_view text) const {
  std::vector<EntityMention> all = ExtractEntities(text);
  std::vector<EntityMention> numbers = ExtractNumbers(text);
  all.insert(all.end(), numbers.begin(), numbers.end());
  std::stable_sort(all.begin(), all.end(),
                   [](const EntityMention &a, const EntityMention &b) {
                     return a.start < b.start;
                   });
  return all;
}

BuiltinRecognizer::BuiltinRecognizer(const text::AbbreviationList &abbrevs)
    : abbrevs_(abbrevs) {}

std::vector<EntityMention> BuiltinRecognizer::ExtractEntities(
    std::string_view text) const {
  std::vector<text::Token> tokens = text::AnnotateTokens(text, abbrevs_);
  std::vector<WordToken> words;
  words.reserve(tokens.size());
  for (const auto &t : tokens) words.push_back(MakeWordToken(text, t, abbrevs_));

  std::vector<EntityMention> out;
  std::vector<size_t> run;
  bool run_honorific = false;
  bool pending_honorific = false;

  auto flush = [&]() {
    size_t first = 0;
    while (first < run.size() &&
           FunctionWords().count(text::FoldCase(words[run[first]].core))) {
      ++first;
    }
    if (first < run.size()) {
      const WordToken &head = words[run[first]];
      const WordToken &tail = words[run.back()];
      bool single_initial = run.size() - first == 1 && head.sentence_initial;
      if (!single_initial || run_honorific || IsAcronym(head.core)) {
        EntityMention m;
        m.kind = MentionKind::kNamedEntity;
        m.start = head.core_begin;
        m.end = tail.core_end;
        m.surface = std::string(text.substr(m.start, m.end - m.start));
        // Collapse internal whitespace for the canonical form.
        for (const auto &span : text::TokenSpans(m.surface)) {
          if (!m.canonical.empty()) m.canonical += ' ';
          m.canonical += m.surface.substr(span.start, span.end - span.start);
        }
        out.push_back(std::move(m));
      }
    }
    run.clear();
    run_honorific = false;
  };

  for (size_t i = 0; i < words.size(); ++i) {
    const WordToken &w = words[i];
    if (w.sentence_initial) {
      flush();
      pending_honorific = false;
    }
    if (w.breaks_before) flush();
    std::string folded = text::FoldCase(w.core);
    if (Honorifics().count(folded)) {
      flush();
      pending_honorific = true;
    } else if (abbrevs_.Contains(w.core) || w.core == "I" || IsCurrencyWord(folded) ||
               !StartsUppercase(w.core)) {
      flush();
      pending_honorific = false;
    } else {
      // "Aiyar J. The appeal": a function word after an initial opens a
      // new sentence rather than continuing the name.
      if (!run.empty() && words[run.back()].core.back() == '.' &&
          FunctionWords().count(folded)) {
        flush();
      }
      if (run.empty()) run_honorific = pending_honorific;
      pending_honorific = false;
      run.push_back(i);
      if (w.breaks_after) {
        bool joins_initial = w.comma_only && !w.sentence_final &&
                             i + 1 < words.size() &&
                             text::IsInitialism(words[i + 1].core) &&
                             !words[i + 1].breaks_before;
        if (!joins_initial) flush();
      }
    }
    if (w.sentence_final) {
      flush();
      pending_honorific = false;
    }
  }
  flush();
  return out;
}

RemoteRecognizer::RemoteRecognizer(std::shared_ptr<const SidecarClient> client)
    : client_(std::move(client)) {}

std::vector<EntityMention> RemoteRecognizer::ExtractEntities(
    std::string_view text) const {
  std::string key(text);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  nlohmann::json resp = client_->Post("/ner", {{"text", key}});
  std::vector<EntityMention> out;
  try {
    for (const auto &m : resp.at("mentions")) {
      std::string kind = m.value("kind", "named_entity");
      if (kind != "named_entity") continue;
      size_t cb = m.at("start").get<size_t>();
      size_t ce = m.at("end").get<size_t>();
      size_t b = CodePointToByteOffset(text, cb);
      size_t e = CodePointToByteOffset(text, ce);
      if (b >= e || e > text.size()) {
        throw BackendProtocolError("sidecar /ner span out of bounds");
      }
      EntityMention em;
      em.kind = MentionKind::kNamedEntity;
      em.start = b;
      em.end = e;
      em.surface = std::string(text.substr(b, e - b));
      for (const auto &span : text::TokenSpans(em.surface)) {
        if (!em.canonical.empty()) em.canonical += ' ';
        em.canonical += em.surface.substr(span.start, span.end - span.start);
      }
      out.push_back(std::move(em));
    }
  } catch (const nlohmann::json::exception &e) {
    throw BackendProtocolError(std::string("malformed /ner response: ") + e.what());
  }
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(std::move(key), out);
  return out;
}

size_t CodePointToByteOffset(std::string_view text, size_t code_points) {
  size_t pos = 0;
  size_t seen = 0;
  while (pos < text.size() && seen < code_points) {
    unsigned char c = static_cast<unsigned char>(text[pos]);
    size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : 4;
    pos = std::min(pos + len, text.size());
    ++seen;
  }
  if (seen < code_points) return text.size() + 1;
  return pos;
}

bool ContainsDate(std::string_view text) {
  static const std::string kMonth =
      "(jan(uary)?|feb(ruary)?|mar(ch)?|apr(il)?|may|june?|july?|aug(ust)?|"
      "sep(t(ember)?)?|oct(ober)?|nov(ember)?|dec(ember)?)";
  static const std::regex kMonthThenNumber("\\b" + kMonth + "\\.?,?\\s+\\d{1,4}\\b",
                                           std::regex::icase);
  static const std::regex kNumberThenMonth(
      "\\b\\d{1,2}(st|nd|rd|th)?\\s+(day\\s+)?(of\\s+)?" + kMonth + "\\b",
      std::regex::icase);
  static const std::regex kNumeric("\\b\\d{1,2}[./-]\\d{1,2}[./-]\\d{2,4}\\b");
  std::string s(text);
  return std::regex_search(s, kMonthThenNumber) ||
         std::regex_search(s, kNumberThenMonth) || std::regex_search(s, kNumeric);
}

}  // namespace veridict::recognizers
