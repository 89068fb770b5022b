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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_set>

#include "veridict/errors.h"
#include "veridict/metrics.h"
#include "veridict/textproc.h"

namespace veridict::extractive {

namespace {

const std::unordered_set<std::string> &StopWords() {
  static const std::unordered_set<std::string> kSet = {
      "a", "about", "above", "after", "again", "against", "all", "also", "am",
      "an", "and", "any", "are", "as", "at", "be", "because", "been", "before",
      "being", "below", "between", "both", "but", "by", "can", "could", "did",
      "do", "does", "doing", "down", "during", "each", "few", "for", "from",
      "further", "had", "has", "have", "having", "he", "her", "here", "hers",
      "herself", "him", "himself", "his", "how", "i", "if", "in", "into", "is",
      "it", "its", "itself", "just", "may", "me", "might", "more", "most",
      "must", "my", "myself", "no", "nor", "not", "now", "of", "off", "on",
      "once", "only", "or", "other", "our", "ours", "ourselves", "out", "over",
      "own", "said", "same", "shall", "she", "should", "so", "some", "such",
      "than", "that", "the", "their", "theirs", "them", "themselves", "then",
      "there", "these", "they", "this", "those", "through", "thus", "to", "too",
      "under", "until", "up", "upon", "very", "was", "we", "were", "what",
      "when", "where", "whether", "which", "while", "who", "whom", "why",
      "will", "with", "would", "you", "your", "yours", "yourself"};
  return kSet;
}

bool IsWordByte(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

const std::set<std::string> &LowercaseHeadingWords() {
  static const std::set<std::string> kSet = {"of", "and", "the", "in", "for",
                                             "to", "on", "a", "an", "v.", "vs."};
  return kSet;
}

bool IsSectionMarker(std::string_view token) {
  // "1", "2.", "3.1", "IV.", "(a)"
  if (token.size() >= 3 && token.front() == '(' && token.back() == ')') {
    return std::all_of(token.begin() + 1, token.end() - 1,
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
  }
  std::string_view t = token;
  if (!t.empty() && t.back() == '.') t.remove_suffix(1);
  if (t.empty()) return false;
  bool numeric = std::all_of(t.begin(), t.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  });
  if (numeric && std::isdigit(static_cast<unsigned char>(t.front()))) return true;
  bool roman = token.back() == '.' &&
               std::all_of(t.begin(), t.end(), [](char c) {
                 return c == 'I' || c == 'V' || c == 'X' || c == 'L' || c == 'C';
               });
  return roman;
}

bool IsHeadingLine(std::string_view line) {
  std::vector<text::TokenSpan> spans = text::TokenSpans(line);
  if (spans.empty() || spans.size() >= 6) return false;
  std::vector<std::string_view> tokens;
  for (const auto &s : spans) tokens.push_back(line.substr(s.start, s.end - s.start));
  if (IsSectionMarker(tokens[0])) return true;
  bool has_letter = false;
  bool all_caps = true;
  bool title = true;
  for (std::string_view t : tokens) {
    for (char c : t) {
      if (std::islower(static_cast<unsigned char>(c))) all_caps = false;
      if (std::isalpha(static_cast<unsigned char>(c))) has_letter = true;
    }
    size_t first = 0;
    while (first < t.size() && !std::isalpha(static_cast<unsigned char>(t[first]))) ++first;
    if (first == t.size()) continue;
    if (std::islower(static_cast<unsigned char>(t[first])) &&
        !LowercaseHeadingWords().count(text::FoldCase(t))) {
      title = false;
    }
  }
  if (!has_letter) return false;
  // A heading does not end like a sentence of prose.
  char last = line[spans.back().end - 1];
  if (last == ',' || last == ';') return false;
  return all_caps || title;
}

}  // namespace

std::vector<std::string> ContentTerms(std::string_view text) {
  std::vector<std::string> out;
  for (std::string token : text::MetricTokens(text)) {
    size_t b = 0, e = token.size();
    while (b < e && !IsWordByte(static_cast<unsigned char>(token[b]))) ++b;
    while (e > b && !IsWordByte(static_cast<unsigned char>(token[e - 1]))) --e;
    if (b == e) continue;
    std::string term = token.substr(b, e - b);
    if (StopWords().count(term)) continue;
    out.push_back(std::move(term));
  }
  return out;
}

TfidfTable TfidfTable::Build(const std::vector<std::string> &documents) {
  if (documents.empty()) throw InvalidArgument("TF-IDF needs at least one document");
  TfidfTable table;
  table.num_documents_ = documents.size();
  for (const auto &doc : documents) {
    std::vector<std::string> terms = ContentTerms(doc);
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    for (auto &t : terms) ++table.df_[std::move(t)];
  }
  return table;
}

double TfidfTable::Idf(const std::string &term) const {
  auto it = df_.find(term);
  size_t df = it == df_.end() ? 1 : it->second;
  return std::log(static_cast<double>(num_documents_) / static_cast<double>(df));
}

std::vector<size_t> DetectHeadingOffsets(std::string_view document) {
  std::vector<size_t> offsets;
  size_t pos = 0;
  while (pos <= document.size()) {
    size_t nl = document.find('\n', pos);
    size_t end = nl == std::string_view::npos ? document.size() : nl;
    if (IsHeadingLine(document.substr(pos, end - pos))) {
      size_t first = document.find_first_not_of(" \t\r", pos);
      offsets.push_back(first < end ? first : pos);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return offsets;
}

std::vector<SentenceScore> ScoreSentences(std::string_view document,
                                          const TfidfTable &tfidf,
                                          const BoostWeights &weights,
                                          const recognizers::Recognizer &recognizer) {
  std::vector<text::SentenceSpan> spans = text::SplitSentences(document);
  std::vector<SentenceScore> scores(spans.size());
  std::vector<double> raw(spans.size(), 0.0);
  for (size_t i = 0; i < spans.size(); ++i) {
    std::string_view sentence = document.substr(spans[i].start, spans[i].end - spans[i].start);
    std::vector<std::string> terms = ContentTerms(sentence);
    std::map<std::string, size_t> tf;
    for (const auto &t : terms) ++tf[t];
    if (!tf.empty()) {
      double sum = 0.0;
      for (const auto &[term, count] : tf) {
        sum += static_cast<double>(count) / terms.size() * tfidf.Idf(term);
      }
      raw[i] = sum / tf.size();
    }
    scores[i].sentence_index = i;
    if (recognizers::ContainsDate(sentence)) scores[i].date_boost = weights.date;
    if (!recognizer.ExtractEntities(sentence).empty()) {
      scores[i].entity_boost = weights.entity;
    }
  }
  if (!raw.empty()) {
    auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
    double min = *lo, range = *hi - *lo;
    for (size_t i = 0; i < raw.size(); ++i) {
      scores[i].base_tfidf = range > 0.0 ? (raw[i] - min) / range : 0.0;
    }
  }
  // Map each heading line to the sentence containing it and boost the
  // sentences that follow within the window.
  for (size_t offset : DetectHeadingOffsets(document)) {
    auto it = std::find_if(spans.begin(), spans.end(),
                           [&](const text::SentenceSpan &s) { return offset < s.end; });
    if (it == spans.end()) continue;
    size_t h = it->index;
    for (size_t i = h; i < spans.size() && i <= h + weights.heading_window; ++i) {
      scores[i].heading_boost = weights.heading;
    }
  }
  for (auto &s : scores) {
    s.total = s.base_tfidf + s.date_boost + s.entity_boost + s.heading_boost;
  }
  return scores;
}

ExtractiveSummary CaseSummarize(std::string_view document, size_t budget_words,
                                const TfidfTable &tfidf,
                                const BoostWeights &weights,
                                const recognizers::Recognizer &recognizer) {
  if (budget_words == 0) throw InvalidArgument("extractive budget must be >= 1");
  std::vector<text::SentenceSpan> spans = text::SplitSentences(document);
  if (spans.empty()) throw InvalidArgument("cannot summarize an empty document");
  std::vector<SentenceScore> scores = ScoreSentences(document, tfidf, weights, recognizer);

  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return scores[a].total > scores[b].total;
  });

  ExtractiveSummary out;
  for (size_t idx : order) {
    std::string_view sentence =
        document.substr(spans[idx].start, spans[idx].end - spans[idx].start);
    size_t words = text::CountWords(sentence);
    if (out.word_count + words > budget_words && !out.selected.empty()) break;
    out.selected.push_back(idx);
    out.word_count += words;
    if (out.word_count >= budget_words) break;
  }
  std::sort(out.selected.begin(), out.selected.end());
  for (size_t idx : out.selected) {
    out.sentences.emplace_back(
        document.substr(spans[idx].start, spans[idx].end - spans[idx].start));
    if (!out.text.empty()) out.text += kSentenceJoin;
    out.text += out.sentences.back();
  }
  return out;
}

std::set<size_t> PseudoExtractiveLabels(const std::vector<std::string> &document_sentences,
                                        const std::vector<std::string> &gold_sentences) {
  if (document_sentences.empty() || gold_sentences.empty()) {
    throw InvalidArgument("pseudo labels need document and gold sentences");
  }
  std::vector<std::vector<std::string>> doc_tokens;
  doc_tokens.reserve(document_sentences.size());
  for (const auto &s : document_sentences) doc_tokens.push_back(text::MetricTokens(s));

  std::set<size_t> labels;
  for (const auto &gold : gold_sentences) {
    std::vector<std::string> g = text::MetricTokens(gold);
    std::vector<std::pair<double, size_t>> ranked;
    for (size_t i = 0; i < doc_tokens.size(); ++i) {
      double f1 = metrics::RougeN(doc_tokens[i], g, 2).f1;
      if (f1 > 0.0) ranked.emplace_back(f1, i);
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto &a, const auto &b) { return a.first > b.first; });
    for (size_t k = 0; k < ranked.size() && k < 3; ++k) labels.insert(ranked[k].second);
  }
  return labels;
}

}  // namespace veridict::extractive
