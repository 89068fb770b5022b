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

#ifndef VERIDICT_METRICS_H_
#define VERIDICT_METRICS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "veridict/embedding.h"
#include "veridict/nli.h"
#include "veridict/recognizers.h"

namespace veridict::metrics {

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Harmonic mean; 0 when either input is 0.
double HarmonicMean(double p, double r);

// Multiset bigram overlap over case-folded whitespace tokens.
PrfScore Rouge2(std::string_view candidate, std::string_view reference);
PrfScore RougeN(const std::vector<std::string> &candidate,
                const std::vector<std::string> &reference, size_t n);

// Token-level longest common subsequence.
PrfScore RougeL(std::string_view candidate, std::string_view reference);
size_t LcsLength(const std::vector<std::string> &a, const std::vector<std::string> &b);
PrfScore RougeLTokens(const std::vector<std::string> &candidate,
                      const std::vector<std::string> &reference);

struct MeteorParams {
  double alpha = 0.9;
  double beta = 3.0;
  double gamma = 0.5;
};

// Unigram alignment in two stages (exact, then Porter stem), harmonic
// Fmean weighted by alpha, fragmentation penalty gamma * (chunks/m)^beta.
double Meteor(std::string_view candidate, std::string_view reference,
              const MeteorParams &params = {});

// Greedy max-cosine token matching in both directions over token
// embeddings, no IDF weighting. Returns (P, R, F1).
PrfScore BertScore(std::string_view candidate, std::string_view reference,
                   const embedding::Embedder &embedder);

// Fraction of distinct summary entities (by identity) that also occur in the
// document. 1.0 when the summary has none.
double NePrec(std::string_view document, std::string_view summary,
              const recognizers::Recognizer &recognizer);
double NumPrec(std::string_view document, std::string_view summary,
               const recognizers::Recognizer &recognizer);

enum class SummacAggregation { kMean, kMin };

// Per summary sentence: the maximum entailment probability over document
// sentences (premise = document sentence, hypothesis = summary sentence).
std::vector<double> SentenceEntailment(std::string_view document,
                                       std::string_view summary,
                                       const nli::NliBackend &nli);

// Aggregates SentenceEntailment; 0 for a summary without sentences.
double Summac(std::string_view document, std::string_view summary,
              const nli::NliBackend &nli,
              SummacAggregation aggregation = SummacAggregation::kMean);

struct FlaggedSentence {
  size_t sentence_index = 0;
  double nli_score = 0.0;
};

struct AuditReport {
  std::vector<FlaggedSentence> flagged_sentences;
  std::vector<recognizers::EntityMention> unmatched_entities;
  std::vector<recognizers::EntityMention> unmatched_numbers;
};

// Flags summary sentences whose max entailment is below the threshold and
// lists summary entities and numbers absent from the document (first
// occurrence of each identity). A null nli skips sentence flagging.
AuditReport Audit(std::string_view document, std::string_view summary,
                  const recognizers::Recognizer &recognizer,
                  const nli::NliBackend *nli, double nli_threshold = 0.5);

// Column order of metric reports and comparison tables.
enum class Metric {
  kR2P, kR2R, kR2F1, kRlP, kRlR, kRlF1, kMeteor, kBertScore, kSummac,
  kNePrec, kNumPrec
};
inline constexpr size_t kNumMetrics = 11;
inline constexpr std::array<Metric, kNumMetrics> kAllMetrics = {
    Metric::kR2P,    Metric::kR2R,      Metric::kR2F1,   Metric::kRlP,
    Metric::kRlR,    Metric::kRlF1,     Metric::kMeteor, Metric::kBertScore,
    Metric::kSummac, Metric::kNePrec,   Metric::kNumPrec};

std::string_view MetricName(Metric metric);
std::optional<Metric> ParseMetric(std::string_view name);

// Per-pair metric values; metrics that were not requested stay empty.
struct MetricReport {
  std::string pair_id;
  std::string method_id;
  std::array<std::optional<double>, kNumMetrics> values;

  std::optional<double> Get(Metric m) const { return values[static_cast<size_t>(m)]; }
  void Set(Metric m, double v) { values[static_cast<size_t>(m)] = v; }
};

// Which metric groups to compute and with which backends. Null backends
// disable the metrics that need them.
struct MetricSelection {
  bool rouge = true;
  bool meteor = true;
  bool bertscore = true;
  bool summac = true;
  bool consistency = true;  // NEPrec and NumPrec
  const embedding::Embedder *embedder = nullptr;
  const nli::NliBackend *nli = nullptr;
  const recognizers::Recognizer *recognizer = nullptr;
  SummacAggregation summac_aggregation = SummacAggregation::kMean;
};

MetricReport Evaluate(const std::string &pair_id, const std::string &method_id,
                      std::string_view document, std::string_view reference,
                      std::string_view candidate, const MetricSelection &selection);

// CSV with header pair_id,method_id,<metric columns>; empty cells for
// metrics that were not computed. Values printed with 6 decimals.
std::string ReportsToCsv(const std::vector<MetricReport> &reports);
std::vector<MetricReport> ReportsFromCsv(std::string_view csv);
std::string ReportsToJsonl(const std::vector<MetricReport> &reports);

}  // namespace veridict::metrics

#endif  // VERIDICT_METRICS_H_
