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

#ifndef VERIDICT_EVALREPORT_H_
#define VERIDICT_EVALREPORT_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "veridict/metrics.h"

namespace veridict::evalreport {

using metrics::kNumMetrics;
using metrics::Metric;
using metrics::MetricReport;

// Method id -> family name. Methods missing from the map fall back to the
// id prefix before the first '-'.
using FamilyMap = std::map<std::string, std::string>;

std::string FamilyOf(const std::string &method_id, const FamilyMap &families);

struct ComparisonRow {
  std::string method_id;
  std::string family;
  size_t num_pairs = 0;
  // Mean over pairs; empty when the metric was not computed for any pair.
  std::array<std::optional<double>, kNumMetrics> means;
  // True where this row holds the maximum of its family for the column.
  std::array<bool, kNumMetrics> best{};
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;  // sorted by family, then method id

  const ComparisonRow *Find(const std::string &method_id) const;
};

// Per-method means. Every method must cover the same set of pair ids;
// otherwise throws InvalidArgument naming the missing ids. A metric is
// averaged only when every pair of the method has it.
ComparisonTable Aggregate(const std::vector<MetricReport> &reports,
                          const FamilyMap &families = {});

std::string TableToCsv(const ComparisonTable &table);
// Markdown with best cells in bold, 4 decimals.
std::string TableToMarkdown(const ComparisonTable &table);

struct TTestResult {
  double t = 0.0;
  double p = 1.0;
  bool significant = false;
  size_t df = 0;
};

// Two-sided paired t-test on a[i] - b[i]; significant when p < alpha and
// mean(a) > mean(b). All-zero differences give t = 0, p = 1; constant
// nonzero differences give an infinite t and p = 0.
TTestResult PairedTTest(const std::vector<double> &a, const std::vector<double> &b,
                        double alpha = 0.05);

// Per-pair values of one metric for two methods, aligned by pair id.
std::pair<std::vector<double>, std::vector<double>> AlignedValues(
    const std::vector<MetricReport> &reports, const std::string &method_a,
    const std::string &method_b, Metric metric);

enum class HumanMetric { kInformativeness, kRedundancy, kFactuality, kCoherence };
inline constexpr size_t kNumHumanMetrics = 4;
inline constexpr std::array<HumanMetric, kNumHumanMetrics> kAllHumanMetrics = {
    HumanMetric::kInformativeness, HumanMetric::kRedundancy, HumanMetric::kFactuality,
    HumanMetric::kCoherence};

std::string_view HumanMetricName(HumanMetric m);
std::optional<HumanMetric> ParseHumanMetric(std::string_view name);

// One annotator's scores (1..5) for one summary.
struct HumanEvalSheet {
  std::string document_id;
  std::string method_id;
  std::string annotator_id;
  std::array<int, kNumHumanMetrics> scores{};

  int Score(HumanMetric m) const { return scores[static_cast<size_t>(m)]; }
};

// Long-format CSV: document_id,method_id,annotator_id,metric,score. Every
// (document, method, annotator) must score all four metrics.
std::vector<HumanEvalSheet> ReadHumanEvalCsv(std::string_view csv);

using HumanEvalMeans = std::map<std::string, std::array<double, kNumHumanMetrics>>;

// Mean over all (document, annotator) scores per method and metric.
HumanEvalMeans HumanEvalAggregate(const std::vector<HumanEvalSheet> &sheets);

// Markdown table; redundancy best at its minimum, others at the maximum.
std::string HumanEvalToMarkdown(const HumanEvalMeans &means);

// Fleiss' kappa over items = (document, method) and categories 1..5. Every
// item needs the same number (>= 2) of raters. When all ratings fall in a
// single category the chance agreement is 1 and kappa is reported as 1.
double FleissKappa(const std::vector<HumanEvalSheet> &sheets, HumanMetric metric);

// Kappa from an item x category count matrix.
double FleissKappaCounts(const std::vector<std::vector<int>> &counts);

}  // namespace veridict::evalreport

#endif  // VERIDICT_EVALREPORT_H_
