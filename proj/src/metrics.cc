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

#include "veridict/metrics.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_map>

#include "json.hpp"
#include "veridict/csv.h"
#include "veridict/errors.h"
#include "veridict/stemmer.h"
#include "veridict/textproc.h"

namespace veridict::metrics {

using recognizers::EntityMention;
using recognizers::MentionKind;

double HarmonicMean(double p, double r) {
  if (p <= 0.0 || r <= 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

PrfScore RougeN(const std::vector<std::string> &candidate,
                const std::vector<std::string> &reference, size_t n) {
  text::NgramCounts c = text::Ngrams(candidate, n);
  text::NgramCounts r = text::Ngrams(reference, n);
  size_t overlap = 0;
  for (const auto &[gram, count] : c) {
    auto it = r.find(gram);
    if (it != r.end()) overlap += std::min(count, it->second);
  }
  size_t c_total = candidate.size() >= n ? candidate.size() - n + 1 : 0;
  size_t r_total = reference.size() >= n ? reference.size() - n + 1 : 0;
  PrfScore s;
  s.precision = c_total ? static_cast<double>(overlap) / c_total : 0.0;
  s.recall = r_total ? static_cast<double>(overlap) / r_total : 0.0;
  s.f1 = HarmonicMean(s.precision, s.recall);
  return s;
}

PrfScore Rouge2(std::string_view candidate, std::string_view reference) {
  return RougeN(text::MetricTokens(candidate), text::MetricTokens(reference), 2);
}

size_t LcsLength(const std::vector<std::string> &a,
                 const std::vector<std::string> &b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

PrfScore RougeLTokens(const std::vector<std::string> &candidate,
                      const std::vector<std::string> &reference) {
  PrfScore s;
  if (candidate.empty() || reference.empty()) return s;
  double lcs = static_cast<double>(LcsLength(candidate, reference));
  s.precision = lcs / candidate.size();
  s.recall = lcs / reference.size();
  s.f1 = HarmonicMean(s.precision, s.recall);
  return s;
}

PrfScore RougeL(std::string_view candidate, std::string_view reference) {
  return RougeLTokens(text::MetricTokens(candidate), text::MetricTokens(reference));
}

double Meteor(std::string_view candidate, std::string_view reference,
              const MeteorParams &params) {
  std::vector<std::string> c = text::MetricTokens(candidate);
  std::vector<std::string> r = text::MetricTokens(reference);
  if (c.empty() || r.empty()) return 0.0;

  std::vector<int> c_to_r(c.size(), -1);
  std::vector<bool> r_used(r.size(), false);
  auto align = [&](const std::vector<std::string> &cv,
                   const std::vector<std::string> &rv) {
    for (size_t i = 0; i < cv.size(); ++i) {
      if (c_to_r[i] >= 0) continue;
      for (size_t j = 0; j < rv.size(); ++j) {
        if (!r_used[j] && cv[i] == rv[j]) {
          c_to_r[i] = static_cast<int>(j);
          r_used[j] = true;
          break;
        }
      }
    }
  };
  align(c, r);
  std::vector<std::string> cs, rs;
  for (const auto &t : c) cs.push_back(text::PorterStem(t));
  for (const auto &t : r) rs.push_back(text::PorterStem(t));
  align(cs, rs);

  size_t matches = 0;
  size_t chunks = 0;
  int prev_j = -2;
  bool prev_matched = false;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c_to_r[i] < 0) {
      prev_matched = false;
      continue;
    }
    ++matches;
    if (!prev_matched || c_to_r[i] != prev_j + 1) ++chunks;
    prev_j = c_to_r[i];
    prev_matched = true;
  }
  if (matches == 0) return 0.0;
  double p = static_cast<double>(matches) / c.size();
  double rec = static_cast<double>(matches) / r.size();
  double fmean = p * rec / (params.alpha * p + (1.0 - params.alpha) * rec);
  double frag = static_cast<double>(chunks) / matches;
  double penalty = params.gamma * std::pow(frag, params.beta);
  return fmean * (1.0 - penalty);
}

PrfScore BertScore(std::string_view candidate, std::string_view reference,
                   const embedding::Embedder &embedder) {
  std::vector<std::string> c = text::MetricTokens(candidate);
  std::vector<std::string> r = text::MetricTokens(reference);
  PrfScore s;
  if (c.empty() || r.empty()) return s;
  std::vector<std::string> vocab;
  std::unordered_map<std::string, size_t> index;
  for (const auto *seq : {&c, &r}) {
    for (const auto &t : *seq) {
      if (index.emplace(t, vocab.size()).second) vocab.push_back(t);
    }
  }
  std::vector<embedding::Vector> vecs = embedder.Embed(vocab);
  std::vector<std::vector<double>> sim(vocab.size(), std::vector<double>(vocab.size(), 0.0));
  std::vector<std::vector<bool>> known(vocab.size(), std::vector<bool>(vocab.size(), false));
  auto cosine = [&](size_t a, size_t b) {
    if (!known[a][b]) {
      sim[a][b] = sim[b][a] = std::max(0.0, embedding::Cosine(vecs[a], vecs[b]));
      known[a][b] = known[b][a] = true;
    }
    return sim[a][b];
  };
  auto directional = [&](const std::vector<std::string> &from,
                         const std::vector<std::string> &to) {
    double total = 0.0;
    for (const auto &t : from) {
      double best = 0.0;
      for (const auto &u : to) best = std::max(best, cosine(index[t], index[u]));
      total += best;
    }
    return std::min(1.0, total / from.size());
  };
  s.precision = directional(c, r);
  s.recall = directional(r, c);
  s.f1 = HarmonicMean(s.precision, s.recall);
  return s;
}

namespace {

std::set<std::string> Identities(const std::vector<EntityMention> &mentions) {
  std::set<std::string> out;
  for (const auto &m : mentions) out.insert(m.Identity());
  return out;
}

double Precision(const std::set<std::string> &summary,
                 const std::set<std::string> &document) {
  if (summary.empty()) return 1.0;
  size_t hit = 0;
  for (const auto &id : summary) hit += document.count(id);
  return static_cast<double>(hit) / summary.size();
}

// First mention of each identity absent from the document.
std::vector<EntityMention> Unmatched(const std::vector<EntityMention> &summary,
                                     const std::set<std::string> &document) {
  std::vector<EntityMention> out;
  std::set<std::string> seen;
  for (const auto &m : summary) {
    std::string id = m.Identity();
    if (document.count(id) || !seen.insert(id).second) continue;
    out.push_back(m);
  }
  return out;
}

}  // namespace

double NePrec(std::string_view document, std::string_view summary,
              const recognizers::Recognizer &recognizer) {
  return Precision(Identities(recognizer.ExtractEntities(summary)),
                   Identities(recognizer.ExtractEntities(document)));
}

double NumPrec(std::string_view document, std::string_view summary,
               const recognizers::Recognizer &recognizer) {
  return Precision(Identities(recognizer.ExtractNumbers(summary)),
                   Identities(recognizer.ExtractNumbers(document)));
}

std::vector<double> SentenceEntailment(std::string_view document,
                                       std::string_view summary,
                                       const nli::NliBackend &nli) {
  std::vector<std::string> doc_sentences = text::SentenceTexts(document);
  std::vector<std::string> sum_sentences = text::SentenceTexts(summary);
  std::vector<double> out;
  out.reserve(sum_sentences.size());
  for (const auto &hyp : sum_sentences) {
    double best = 0.0;
    for (const auto &premise : doc_sentences) {
      best = std::max(best, nli.Score(premise, hyp).entail);
      if (best >= 1.0) break;
    }
    out.push_back(best);
  }
  return out;
}

double Summac(std::string_view document, std::string_view summary,
              const nli::NliBackend &nli, SummacAggregation aggregation) {
  std::vector<double> scores = SentenceEntailment(document, summary, nli);
  if (scores.empty()) return 0.0;
  if (aggregation == SummacAggregation::kMin) {
    return *std::min_element(scores.begin(), scores.end());
  }
  double total = 0.0;
  for (double s : scores) total += s;
  return total / scores.size();
}

AuditReport Audit(std::string_view document, std::string_view summary,
                  const recognizers::Recognizer &recognizer,
                  const nli::NliBackend *nli, double nli_threshold) {
  AuditReport report;
  if (nli != nullptr) {
    std::vector<double> scores = SentenceEntailment(document, summary, *nli);
    for (size_t i = 0; i < scores.size(); ++i) {
      if (scores[i] < nli_threshold) report.flagged_sentences.push_back({i, scores[i]});
    }
  }
  report.unmatched_entities =
      Unmatched(recognizer.ExtractEntities(summary),
                Identities(recognizer.ExtractEntities(document)));
  report.unmatched_numbers =
      Unmatched(recognizer.ExtractNumbers(summary),
                Identities(recognizer.ExtractNumbers(document)));
  return report;
}

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kR2P: return "r2_p";
    case Metric::kR2R: return "r2_r";
    case Metric::kR2F1: return "r2_f1";
    case Metric::kRlP: return "rl_p";
    case Metric::kRlR: return "rl_r";
    case Metric::kRlF1: return "rl_f1";
    case Metric::kMeteor: return "meteor";
    case Metric::kBertScore: return "bertscore";
    case Metric::kSummac: return "summac";
    case Metric::kNePrec: return "neprec";
    case Metric::kNumPrec: return "numprec";
  }
  return "";
}

std::optional<Metric> ParseMetric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (MetricName(m) == name) return m;
  }
  return std::nullopt;
}

MetricReport Evaluate(const std::string &pair_id, const std::string &method_id,
                      std::string_view document, std::string_view reference,
                      std::string_view candidate, const MetricSelection &sel) {
  MetricReport report;
  report.pair_id = pair_id;
  report.method_id = method_id;
  if (sel.rouge) {
    std::vector<std::string> c = text::MetricTokens(candidate);
    std::vector<std::string> r = text::MetricTokens(reference);
    PrfScore r2 = RougeN(c, r, 2);
    PrfScore rl = RougeLTokens(c, r);
    report.Set(Metric::kR2P, r2.precision);
    report.Set(Metric::kR2R, r2.recall);
    report.Set(Metric::kR2F1, r2.f1);
    report.Set(Metric::kRlP, rl.precision);
    report.Set(Metric::kRlR, rl.recall);
    report.Set(Metric::kRlF1, rl.f1);
  }
  if (sel.meteor) report.Set(Metric::kMeteor, Meteor(candidate, reference));
  if (sel.bertscore && sel.embedder) {
    report.Set(Metric::kBertScore, BertScore(candidate, reference, *sel.embedder).f1);
  }
  if (sel.summac && sel.nli) {
    report.Set(Metric::kSummac,
               Summac(document, candidate, *sel.nli, sel.summac_aggregation));
  }
  if (sel.consistency && sel.recognizer) {
    report.Set(Metric::kNePrec, NePrec(document, candidate, *sel.recognizer));
    report.Set(Metric::kNumPrec, NumPrec(document, candidate, *sel.recognizer));
  }
  return report;
}

namespace {

std::string FormatValue(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string ReportsToCsv(const std::vector<MetricReport> &reports) {
  csv::Row header = {"pair_id", "method_id"};
  for (Metric m : kAllMetrics) header.emplace_back(MetricName(m));
  std::string out = csv::FormatRow(header);
  for (const auto &r : reports) {
    csv::Row row = {r.pair_id, r.method_id};
    for (Metric m : kAllMetrics) {
      auto v = r.Get(m);
      row.push_back(v ? FormatValue(*v) : "");
    }
    out += csv::FormatRow(row);
  }
  return out;
}

std::vector<MetricReport> ReportsFromCsv(std::string_view text) {
  std::vector<csv::Row> rows = csv::Parse(text);
  if (rows.empty()) return {};
  const csv::Row &header = rows[0];
  if (header.size() < 2 || header[0] != "pair_id" || header[1] != "method_id") {
    throw InvalidArgument("metric CSV must start with pair_id,method_id");
  }
  std::vector<std::optional<Metric>> columns;
  for (size_t i = 2; i < header.size(); ++i) columns.push_back(ParseMetric(header[i]));
  std::vector<MetricReport> out;
  for (size_t r = 1; r < rows.size(); ++r) {
    const csv::Row &row = rows[r];
    if (row.size() != header.size()) {
      throw InvalidArgument("metric CSV row " + std::to_string(r) +
                            " has the wrong number of fields");
    }
    MetricReport rep;
    rep.pair_id = row[0];
    rep.method_id = row[1];
    for (size_t i = 2; i < row.size(); ++i) {
      if (!columns[i - 2] || row[i].empty()) continue;
      try {
        rep.Set(*columns[i - 2], std::stod(row[i]));
      } catch (const std::exception &) {
        throw InvalidArgument("bad metric value '" + row[i] + "'");
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::string ReportsToJsonl(const std::vector<MetricReport> &reports) {
  std::string out;
  for (const auto &r : reports) {
    nlohmann::ordered_json j;
    j["pair_id"] = r.pair_id;
    j["method_id"] = r.method_id;
    for (Metric m : kAllMetrics) {
      auto v = r.Get(m);
      j[std::string(MetricName(m))] = v ? nlohmann::ordered_json(*v) : nullptr;
    }
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace veridict::metrics
