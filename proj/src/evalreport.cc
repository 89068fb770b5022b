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

#include "veridict/evalreport.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <limits>
#include <set>
#include <tuple>

#include <boost/math/distributions/students_t.hpp>

#include "veridict/csv.h"
#include "veridict/errors.h"

namespace veridict::evalreport {

namespace {

std::string Fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string JoinIds(const std::set<std::string> &ids) {
  std::string out;
  for (const auto &id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

std::string FamilyOf(const std::string &method_id, const FamilyMap &families) {
  auto it = families.find(method_id);
  if (it != families.end()) return it->second;
  return method_id.substr(0, method_id.find('-'));
}

const ComparisonRow *ComparisonTable::Find(const std::string &method_id) const {
  for (const auto &row : rows) {
    if (row.method_id == method_id) return &row;
  }
  return nullptr;
}

ComparisonTable Aggregate(const std::vector<MetricReport> &reports,
                          const FamilyMap &families) {
  if (reports.empty()) throw InvalidArgument("no metric reports to aggregate");
  std::map<std::string, std::vector<const MetricReport *>> by_method;
  std::set<std::string> all_pairs;
  for (const auto &r : reports) {
    by_method[r.method_id].push_back(&r);
    all_pairs.insert(r.pair_id);
  }
  for (const auto &[method, rs] : by_method) {
    std::set<std::string> pairs;
    for (const auto *r : rs) {
      if (!pairs.insert(r->pair_id).second) {
        throw InvalidArgument("method '" + method + "' has duplicate pair '" +
                              r->pair_id + "'");
      }
    }
    if (pairs.size() != all_pairs.size()) {
      std::set<std::string> missing;
      std::set_difference(all_pairs.begin(), all_pairs.end(), pairs.begin(), pairs.end(),
                          std::inserter(missing, missing.end()));
      throw InvalidArgument("method '" + method + "' is missing pairs: " +
                            JoinIds(missing));
    }
  }

  ComparisonTable table;
  for (const auto &[method, rs] : by_method) {
    ComparisonRow row;
    row.method_id = method;
    row.family = FamilyOf(method, families);
    row.num_pairs = rs.size();
    // Sum in pair-id order so the mean does not depend on input order.
    std::vector<const MetricReport *> sorted = rs;
    std::sort(sorted.begin(), sorted.end(),
              [](const MetricReport *a, const MetricReport *b) { return a->pair_id < b->pair_id; });
    for (size_t m = 0; m < kNumMetrics; ++m) {
      double sum = 0.0;
      bool complete = true;
      for (const auto *r : sorted) {
        if (!r->values[m]) {
          complete = false;
          break;
        }
        sum += *r->values[m];
      }
      if (complete) row.means[m] = sum / static_cast<double>(sorted.size());
    }
    table.rows.push_back(std::move(row));
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const auto &a, const auto &b) {
    return std::tie(a.family, a.method_id) < std::tie(b.family, b.method_id);
  });

  std::map<std::string, std::vector<ComparisonRow *>> by_family;
  for (auto &row : table.rows) by_family[row.family].push_back(&row);
  for (auto &[family, rows] : by_family) {
    for (size_t m = 0; m < kNumMetrics; ++m) {
      std::optional<double> best;
      for (const auto *row : rows) {
        if (row->means[m] && (!best || *row->means[m] > *best)) best = row->means[m];
      }
      if (!best) continue;
      for (auto *row : rows) row->best[m] = row->means[m] && *row->means[m] == *best;
    }
  }
  return table;
}

std::string TableToCsv(const ComparisonTable &table) {
  csv::Row header = {"method_id", "family", "pairs"};
  for (Metric m : metrics::kAllMetrics) header.emplace_back(metrics::MetricName(m));
  std::string out = csv::FormatRow(header);
  for (const auto &row : table.rows) {
    csv::Row line = {row.method_id, row.family, std::to_string(row.num_pairs)};
    for (size_t m = 0; m < kNumMetrics; ++m) {
      line.push_back(row.means[m] ? Fixed(*row.means[m], 6) : "");
    }
    out += csv::FormatRow(line);
  }
  return out;
}

std::string TableToMarkdown(const ComparisonTable &table) {
  std::string out = "| method | family |";
  std::string rule = "|---|---|";
  for (Metric m : metrics::kAllMetrics) {
    out += " " + std::string(metrics::MetricName(m)) + " |";
    rule += "---|";
  }
  out += "\n" + rule + "\n";
  for (const auto &row : table.rows) {
    out += "| " + row.method_id + " | " + row.family + " |";
    for (size_t m = 0; m < kNumMetrics; ++m) {
      std::string cell = row.means[m] ? Fixed(*row.means[m], 4) : "-";
      if (row.best[m]) cell = "**" + cell + "**";
      out += " " + cell + " |";
    }
    out += "\n";
  }
  return out;
}

TTestResult PairedTTest(const std::vector<double> &a, const std::vector<double> &b,
                        double alpha) {
  if (a.size() != b.size()) {
    throw InvalidArgument("paired t-test needs samples of equal length (" +
                          std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
  if (a.size() < 2) throw InvalidArgument("paired t-test needs at least 2 pairs");
  const size_t n = a.size();
  double mean = 0.0;
  for (size_t i = 0; i < n; ++i) mean += a[i] - b[i];
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double d = a[i] - b[i] - mean;
    ss += d * d;
  }
  TTestResult res;
  res.df = n - 1;
  double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (sd == 0.0) {
    if (mean == 0.0) return res;
    res.t = mean > 0 ? std::numeric_limits<double>::infinity()
                     : -std::numeric_limits<double>::infinity();
    res.p = 0.0;
  } else {
    res.t = mean / (sd / std::sqrt(static_cast<double>(n)));
    boost::math::students_t dist(static_cast<double>(res.df));
    res.p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(res.t)));
    res.p = std::min(1.0, res.p);
  }
  res.significant = res.p < alpha && mean > 0.0;
  return res;
}

std::pair<std::vector<double>, std::vector<double>> AlignedValues(
    const std::vector<MetricReport> &reports, const std::string &method_a,
    const std::string &method_b, Metric metric) {
  std::map<std::string, double> va, vb;
  for (const auto &r : reports) {
    auto v = r.Get(metric);
    if (!v) continue;
    if (r.method_id == method_a) va[r.pair_id] = *v;
    if (r.method_id == method_b) vb[r.pair_id] = *v;
  }
  std::set<std::string> missing;
  for (const auto &[id, _] : va) if (!vb.count(id)) missing.insert(id);
  for (const auto &[id, _] : vb) if (!va.count(id)) missing.insert(id);
  if (!missing.empty()) {
    throw InvalidArgument("pairs not covered by both methods: " + JoinIds(missing));
  }
  std::pair<std::vector<double>, std::vector<double>> out;
  for (const auto &[id, v] : va) {
    out.first.push_back(v);
    out.second.push_back(vb[id]);
  }
  return out;
}

std::string_view HumanMetricName(HumanMetric m) {
  switch (m) {
    case HumanMetric::kInformativeness: return "informativeness";
    case HumanMetric::kRedundancy: return "redundancy";
    case HumanMetric::kFactuality: return "factuality";
    case HumanMetric::kCoherence: return "coherence";
  }
  return "";
}

std::optional<HumanMetric> ParseHumanMetric(std::string_view name) {
  for (HumanMetric m : kAllHumanMetrics) {
    if (HumanMetricName(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<HumanEvalSheet> ReadHumanEvalCsv(std::string_view text) {
  std::vector<csv::Row> rows = csv::Parse(text);
  if (rows.empty()) return {};
  const csv::Row expected = {"document_id", "method_id", "annotator_id", "metric", "score"};
  if (rows[0] != expected) {
    throw InvalidArgument(
        "human-eval CSV header must be document_id,method_id,annotator_id,metric,score");
  }
  using Key = std::tuple<std::string, std::string, std::string>;
  std::map<Key, std::array<int, kNumHumanMetrics>> cells;
  for (size_t r = 1; r < rows.size(); ++r) {
    const csv::Row &row = rows[r];
    if (row.size() != expected.size()) {
      throw InvalidArgument("human-eval CSV row " + std::to_string(r) +
                            " has the wrong number of fields");
    }
    auto metric = ParseHumanMetric(row[3]);
    if (!metric) throw InvalidArgument("unknown human-eval metric '" + row[3] + "'");
    int score = 0;
    if (row[4].size() != 1 || row[4][0] < '1' || row[4][0] > '5') {
      throw InvalidArgument("human-eval score must be an integer 1..5, got '" + row[4] + "'");
    }
    score = row[4][0] - '0';
    auto &slot = cells[{row[0], row[1], row[2]}][static_cast<size_t>(*metric)];
    if (slot != 0) {
      throw InvalidArgument("duplicate human-eval score for " + row[0] + "/" + row[1] +
                            "/" + row[2] + "/" + row[3]);
    }
    slot = score;
  }
  std::vector<HumanEvalSheet> out;
  for (const auto &[key, scores] : cells) {
    HumanEvalSheet s{std::get<0>(key), std::get<1>(key), std::get<2>(key), scores};
    for (HumanMetric m : kAllHumanMetrics) {
      if (s.Score(m) == 0) {
        throw InvalidArgument("no " + std::string(HumanMetricName(m)) + " score for " +
                              s.document_id + "/" + s.method_id + "/" + s.annotator_id);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

HumanEvalMeans HumanEvalAggregate(const std::vector<HumanEvalSheet> &sheets) {
  std::map<std::string, std::pair<std::array<long, kNumHumanMetrics>, long>> sums;
  for (const auto &s : sheets) {
    auto &[totals, count] = sums[s.method_id];
    for (size_t m = 0; m < kNumHumanMetrics; ++m) {
      if (s.scores[m] < 1 || s.scores[m] > 5) {
        throw InvalidArgument("human-eval score out of range 1..5");
      }
      totals[m] += s.scores[m];
    }
    ++count;
  }
  HumanEvalMeans out;
  for (const auto &[method, tc] : sums) {
    auto &means = out[method];
    for (size_t m = 0; m < kNumHumanMetrics; ++m) {
      means[m] = static_cast<double>(tc.first[m]) / static_cast<double>(tc.second);
    }
  }
  return out;
}

std::string HumanEvalToMarkdown(const HumanEvalMeans &means) {
  std::array<double, kNumHumanMetrics> best{};
  for (size_t m = 0; m < kNumHumanMetrics; ++m) {
    bool lower = kAllHumanMetrics[m] == HumanMetric::kRedundancy;
    bool first = true;
    for (const auto &[_, v] : means) {
      if (first || (lower ? v[m] < best[m] : v[m] > best[m])) best[m] = v[m];
      first = false;
    }
  }
  std::string out = "| method |";
  std::string rule = "|---|";
  for (HumanMetric m : kAllHumanMetrics) {
    out += " " + std::string(HumanMetricName(m)) + " |";
    rule += "---|";
  }
  out += "\n" + rule + "\n";
  for (const auto &[method, v] : means) {
    out += "| " + method + " |";
    for (size_t m = 0; m < kNumHumanMetrics; ++m) {
      std::string cell = Fixed(v[m], 2);
      if (v[m] == best[m]) cell = "**" + cell + "**";
      out += " " + cell + " |";
    }
    out += "\n";
  }
  return out;
}

double FleissKappaCounts(const std::vector<std::vector<int>> &counts) {
  if (counts.empty()) throw InvalidArgument("Fleiss kappa needs at least one item");
  const size_t k = counts[0].size();
  int raters = -1;
  std::vector<double> category_totals(k, 0.0);
  double p_bar = 0.0;
  for (const auto &row : counts) {
    if (row.size() != k) throw InvalidArgument("ragged count matrix");
    int n = 0;
    double sq = 0.0;
    for (size_t j = 0; j < k; ++j) {
      if (row[j] < 0) throw InvalidArgument("negative rating count");
      n += row[j];
      sq += static_cast<double>(row[j]) * row[j];
      category_totals[j] += row[j];
    }
    if (raters < 0) raters = n;
    if (n != raters) {
      throw InvalidArgument("unbalanced raters: items rated by " + std::to_string(raters) +
                            " and " + std::to_string(n) + " raters");
    }
    if (n < 2) throw InvalidArgument("Fleiss kappa needs at least 2 raters per item");
    p_bar += (sq - n) / (static_cast<double>(n) * (n - 1));
  }
  const double items = static_cast<double>(counts.size());
  p_bar /= items;
  double pe = 0.0;
  for (double t : category_totals) {
    double p = t / (items * raters);
    pe += p * p;
  }
  if (pe >= 1.0) return 1.0;
  return (p_bar - pe) / (1.0 - pe);
}

double FleissKappa(const std::vector<HumanEvalSheet> &sheets, HumanMetric metric) {
  std::map<std::pair<std::string, std::string>, std::vector<int>> items;
  for (const auto &s : sheets) {
    int score = s.Score(metric);
    if (score < 1 || score > 5) throw InvalidArgument("human-eval score out of range 1..5");
    auto &row = items[{s.document_id, s.method_id}];
    row.resize(5, 0);
    ++row[score - 1];
  }
  std::vector<std::vector<int>> counts;
  counts.reserve(items.size());
  for (auto &[_, row] : items) counts.push_back(std::move(row));
  return FleissKappaCounts(counts);
}

}  // namespace veridict::evalreport
