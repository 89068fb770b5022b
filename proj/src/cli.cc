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

#include "veridict/cli.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <thread>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"
#include "veridict/config.h"
#include "veridict/corpus.h"
#include "veridict/corrector.h"
#include "veridict/csv.h"
#include "veridict/embedding.h"
#include "veridict/errors.h"
#include "veridict/evalreport.h"
#include "veridict/extractive.h"
#include "veridict/hashing.h"
#include "veridict/llm_backend.h"
#include "veridict/metrics.h"
#include "veridict/nli.h"
#include "veridict/orchestrator.h"
#include "veridict/recognizers.h"
#include "veridict/sidecar_client.h"
#include "veridict/textproc.h"

namespace veridict::cli {

namespace {

using json = nlohmann::ordered_json;
using orchestrator::CandidateSummary;

// Bad flag values detected after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Flags {
  std::string config_path;
  std::string corpus;
  std::string source;
  std::string out;
  std::string summaries;
  std::string reports;
  std::string human;
  std::string ledger;
  std::string metrics = "all";
  std::string compare;
  std::string metric = "r2_f1";
  std::string variant;
  std::string backend;
  std::string base_url;
  std::string model;
  std::string recognizer;
  std::string embedder;
  std::string nli;
  std::string sidecar_url;
  int64_t chunk_words = 0;
  int64_t min_target_words = 0;
  int64_t jobs = 0;
  int64_t budget_words = 0;
  double threshold = 0.5;
  double alpha = 0.05;
  bool fragments = false;
  bool markdown = false;
};

// Flag -> config field overrides, applied only for flags that were given.
struct Override {
  CLI::Option *option;
  std::function<void(config::RunConfig &)> apply;
};

class Run {
 public:
  Run(std::string command, const Flags &flags, config::RunConfig cfg, std::ostream &out,
      std::ostream &err)
      : command_(std::move(command)), flags_(flags), cfg_(std::move(cfg)), out_(out),
        err_(err) {}

  int Execute();

 private:
  int Ingest();
  int Stats();
  int Extract();
  int Summarize();
  int Evaluate();
  int Audit();
  int Correct();
  int Report();

  size_t Jobs() const {
    if (cfg_.jobs > 0) return static_cast<size_t>(cfg_.jobs);
    return std::max(1u, std::thread::hardware_concurrency());
  }

  const std::string &Require(const std::string &value, const char *flag) const {
    if (value.empty()) throw UsageError(std::string("missing required flag ") + flag);
    return value;
  }

  std::vector<corpus::CorpusRecord> LoadRecords();
  std::map<std::string, const corpus::CorpusRecord *> Index(
      const std::vector<corpus::CorpusRecord> &records) const;
  std::vector<CandidateSummary> LoadSummaries(const std::string &path);

  std::shared_ptr<const SidecarClient> Sidecar();
  const recognizers::Recognizer &Recognizer();
  const embedding::Embedder &Embedder();
  const nli::NliBackend &Nli();

  std::string ReadInput(const std::string &path);
  void WriteOutput(const std::string &path, const std::string &content);
  void WriteManifest();

  std::string command_;
  const Flags &flags_;
  config::RunConfig cfg_;
  std::ostream &out_;
  std::ostream &err_;

  json inputs_ = json::object();
  json outputs_ = json::object();
  std::string manifest_anchor_;

  std::shared_ptr<const SidecarClient> sidecar_;
  std::unique_ptr<recognizers::Recognizer> recognizer_;
  std::unique_ptr<embedding::Embedder> embedder_;
  std::unique_ptr<nli::NliBackend> nli_;
};

// Runs fn(i) for i in [0, n) on up to `workers` threads. The exception of
// the lowest failing index is rethrown after all workers finish.
void ParallelFor(size_t n, size_t workers, const std::function<void(size_t)> &fn) {
  std::vector<std::exception_ptr> errors(n);
  auto guarded = [&](size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  workers = std::max<size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (size_t i = 0; i < n; ++i) guarded(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> threads;
    for (size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&]() {
        for (size_t i = next++; i < n; i = next++) guarded(i);
      });
    }
    for (auto &t : threads) t.join();
  }
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string FormatDouble(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::vector<std::string> SplitList(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int Run::Execute() {
  int status = kExitOk;
  if (command_ == "ingest") status = Ingest();
  else if (command_ == "stats") status = Stats();
  else if (command_ == "extract") status = Extract();
  else if (command_ == "summarize") status = Summarize();
  else if (command_ == "evaluate") status = Evaluate();
  else if (command_ == "audit") status = Audit();
  else if (command_ == "correct") status = Correct();
  else if (command_ == "report") status = Report();
  WriteManifest();
  return status;
}

std::vector<corpus::CorpusRecord> Run::LoadRecords() {
  const std::string &path = Require(cfg_.corpus_root, "--corpus");
  std::vector<corpus::CorpusRecord> records =
      corpus::LoadAny(path, corpus::ParseSource(cfg_.source));
  std::string digest_input;
  for (const auto &r : records) {
    digest_input += r.id + '\0' + r.document_text + '\0' + r.gold_summary_text + '\0';
  }
  inputs_["corpus"] = {{"path", path},
                       {"records", records.size()},
                       {"sha256", hashing::Sha256Hex(digest_input)}};
  return records;
}

std::map<std::string, const corpus::CorpusRecord *> Run::Index(
    const std::vector<corpus::CorpusRecord> &records) const {
  std::map<std::string, const corpus::CorpusRecord *> index;
  for (const auto &r : records) index[r.id] = &r;
  return index;
}

std::vector<CandidateSummary> Run::LoadSummaries(const std::string &path) {
  inputs_[path] = hashing::Sha256File(path);
  std::vector<CandidateSummary> cs = orchestrator::ReadCandidates(path);
  std::stable_sort(cs.begin(), cs.end(), [](const auto &a, const auto &b) {
    return std::tie(a.pair_id, a.method_id) < std::tie(b.pair_id, b.method_id);
  });
  return cs;
}

std::shared_ptr<const SidecarClient> Run::Sidecar() {
  if (!sidecar_) sidecar_ = std::make_shared<SidecarClient>(cfg_.sidecar_url);
  return sidecar_;
}

const recognizers::Recognizer &Run::Recognizer() {
  if (!recognizer_) {
    if (cfg_.recognizer == "sidecar") {
      recognizer_ = std::make_unique<recognizers::RemoteRecognizer>(Sidecar());
    } else {
      recognizer_ = std::make_unique<recognizers::BuiltinRecognizer>();
    }
  }
  return *recognizer_;
}

const embedding::Embedder &Run::Embedder() {
  if (!embedder_) {
    if (cfg_.embedder == "sidecar") {
      embedder_ = std::make_unique<embedding::SidecarEmbedder>(Sidecar());
    } else {
      embedder_ = std::make_unique<embedding::NgramEmbedder>();
    }
  }
  return *embedder_;
}

const nli::NliBackend &Run::Nli() {
  if (!nli_) {
    if (cfg_.nli == "sidecar") {
      nli_ = std::make_unique<nli::SidecarNli>(Sidecar());
    } else {
      nli_ = std::make_unique<nli::VerbatimMockNli>();
    }
  }
  return *nli_;
}

std::string Run::ReadInput(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot read file");
  std::stringstream buf;
  buf << in.rdbuf();
  inputs_[path] = hashing::Sha256Hex(buf.str());
  return buf.str();
}

void Run::WriteOutput(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot write file");
  out << content;
  out.close();
  if (!out) throw IoError(path, "write failed");
  outputs_[path] = hashing::Sha256Hex(content);
  if (manifest_anchor_.empty()) manifest_anchor_ = path;
}

void Run::WriteManifest() {
  if (manifest_anchor_.empty()) return;
  json m;
  m["command"] = command_;
  m["config"] = cfg_.ToJson();
  m["inputs"] = inputs_;
  m["outputs"] = outputs_;
  std::string path = manifest_anchor_ + ".manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot write manifest");
  out << m.dump(2) << '\n';
}

int Run::Ingest() {
  std::vector<corpus::CorpusRecord> records = LoadRecords();
  const std::string &path = Require(flags_.out, "--out");
  std::ostringstream buf;
  for (const auto &r : records) {
    json j;
    j["id"] = r.id;
    j["document"] = r.document_text;
    j["summary"] = r.gold_summary_text;
    j["split"] = corpus::SplitName(r.split);
    j["source"] = corpus::SourceName(r.source);
    buf << j.dump() << '\n';
  }
  WriteOutput(path, buf.str());
  out_ << records.size() << " records written to " << path << '\n';
  return kExitOk;
}

int Run::Stats() {
  std::vector<corpus::CorpusRecord> records = LoadRecords();
  corpus::CorpusStats stats = corpus::ComputeStats(records);
  if (flags_.fragments) {
    corpus::FragmentStats fs = corpus::ComputeCoverageDensity(records);
    stats.coverage = fs.coverage;
    stats.density = fs.density;
  }
  std::map<corpus::Split, size_t> per_split;
  for (const auto &r : records) ++per_split[r.split];

  csv::Row header = {"source", "documents", "avg_doc_words", "avg_summary_words"};
  csv::Row row = {cfg_.source, std::to_string(stats.n_documents),
                  FormatDouble(stats.avg_doc_words, 1),
                  FormatDouble(stats.avg_summary_words, 1)};
  if (flags_.fragments) {
    header.insert(header.end(), {"coverage", "density"});
    row.push_back(FormatDouble(stats.coverage, 2));
    row.push_back(FormatDouble(stats.density, 2));
  }
  for (const auto &[split, n] : per_split) {
    header.push_back(std::string(corpus::SplitName(split)));
    row.push_back(std::to_string(n));
  }
  std::string table = csv::FormatRow(header) + csv::FormatRow(row);
  if (!flags_.out.empty()) WriteOutput(flags_.out, table);
  out_ << table;
  return kExitOk;
}

int Run::Extract() {
  std::vector<corpus::CorpusRecord> records = LoadRecords();
  const std::string &path = Require(flags_.out, "--out");
  if (records.empty()) throw InvalidArgument("corpus is empty");
  std::vector<std::string> docs;
  for (const auto &r : records) docs.push_back(r.document_text);
  extractive::TfidfTable tfidf = extractive::TfidfTable::Build(docs);
  const recognizers::Recognizer &recognizer = Recognizer();

  std::vector<CandidateSummary> results(records.size());
  ParallelFor(records.size(), Jobs(), [&](size_t i) {
    const auto &r = records[i];
    size_t budget = flags_.budget_words > 0
                        ? static_cast<size_t>(flags_.budget_words)
                        : std::max<size_t>(1, text::CountWords(r.gold_summary_text));
    extractive::ExtractiveSummary s =
        extractive::CaseSummarize(r.document_text, budget, tfidf, cfg_.weights, recognizer);
    CandidateSummary c;
    c.pair_id = r.id;
    c.method_id = "casesummarizer";
    c.text = s.text;
    c.chunk_targets = {static_cast<int64_t>(budget)};
    c.backend_metadata = {{"sentences", s.selected.size()}, {"words", s.word_count}};
    results[i] = std::move(c);
  });
  std::string buf;
  for (const auto &c : results) buf += orchestrator::CandidateToJson(c) + '\n';
  WriteOutput(path, buf);
  out_ << results.size() << " extractive summaries written to " << path << '\n';
  return kExitOk;
}

int Run::Summarize() {
  std::vector<corpus::CorpusRecord> records = LoadRecords();
  const std::string &path = Require(flags_.out, "--out");
  orchestrator::VariantKind kind;
  try {
    kind = orchestrator::ParseVariant(cfg_.variant);
  } catch (const InvalidArgument &e) {
    throw UsageError(e.what());
  }

  std::unique_ptr<llm::LlmBackend> backend;
  if (cfg_.backend == "mock-echo") {
    backend = std::make_unique<llm::MockLlmBackend>(llm::MockLlmBackend::Mode::kEcho,
                                                    cfg_.backend);
  } else if (cfg_.backend == "mock-truncate") {
    backend = std::make_unique<llm::MockLlmBackend>(llm::MockLlmBackend::Mode::kTruncate,
                                                    cfg_.backend);
  } else {
    const char *key = std::getenv(cfg_.api_key_env.c_str());
    backend = std::make_unique<llm::ChatCompletionsBackend>(cfg_.base_url, cfg_.model,
                                                            key ? key : "");
  }
  llm::RateLimiter limiter(cfg_.requests_per_second);

  std::optional<extractive::TfidfTable> tfidf;
  if (kind == orchestrator::VariantKind::kHybrid && !records.empty()) {
    std::vector<std::string> docs;
    for (const auto &r : records) docs.push_back(r.document_text);
    tfidf = extractive::TfidfTable::Build(docs);
  }

  orchestrator::OrchestratorOptions options;
  options.chunk_words = static_cast<size_t>(cfg_.chunk_words);
  options.min_target_words = cfg_.min_target_words;
  options.max_concurrency = 1;  // parallelism is per document
  options.temperature = cfg_.temperature;
  options.backend_name = cfg_.backend;
  options.rate_limiter = &limiter;
  options.tfidf = tfidf ? &*tfidf : nullptr;
  options.weights = cfg_.weights;
  options.recognizer = &Recognizer();
  options.hybrid_extract_words = static_cast<size_t>(cfg_.extract_words);

  std::vector<std::optional<CandidateSummary>> results(records.size());
  std::vector<std::string> failures(records.size());
  ParallelFor(records.size(), Jobs(), [&](size_t i) {
    try {
      results[i] = orchestrator::Summarize(records[i], kind, options, *backend);
    } catch (const Error &e) {
      failures[i] = e.what();
    }
  });
  std::string buf;
  size_t written = 0;
  int status = kExitOk;
  for (size_t i = 0; i < records.size(); ++i) {
    if (results[i]) {
      buf += orchestrator::CandidateToJson(*results[i]) + '\n';
      ++written;
    } else {
      err_ << "error: " << failures[i] << '\n';
      status = kExitRuntime;
    }
  }
  WriteOutput(path, buf);
  out_ << written << " of " << records.size() << " summaries written to " << path << '\n';
  return status;
}

int Run::Evaluate() {
  std::vector<corpus::CorpusRecord> records = LoadRecords();
  auto index = Index(records);
  std::vector<CandidateSummary> summaries =
      LoadSummaries(Require(flags_.summaries, "--summaries"));

  metrics::MetricSelection sel;
  sel.rouge = sel.meteor = sel.bertscore = sel.summac = sel.consistency = false;
  for (const std::string &name : SplitList(flags_.metrics)) {
    if (name == "all") {
      sel.rouge = sel.meteor = sel.bertscore = sel.summac = sel.consistency = true;
    } else if (name == "rouge") {
      sel.rouge = true;
    } else if (name == "meteor") {
      sel.meteor = true;
    } else if (name == "bertscore") {
      sel.bertscore = true;
    } else if (name == "summac") {
      sel.summac = true;
    } else if (name == "consistency" || name == "neprec" || name == "numprec") {
      sel.consistency = true;
    } else {
      throw UsageError("unknown metric group '" + name + "'");
    }
  }
  if (sel.bertscore) sel.embedder = &Embedder();
  if (sel.summac) sel.nli = &Nli();
  if (sel.consistency) sel.recognizer = &Recognizer();

  for (const auto &c : summaries) {
    if (!index.count(c.pair_id)) {
      throw InvalidArgument("summary for unknown pair id '" + c.pair_id + "'");
    }
  }
  std::vector<metrics::MetricReport> reports(summaries.size());
  ParallelFor(summaries.size(), Jobs(), [&](size_t i) {
    const auto &c = summaries[i];
    const auto *r = index.at(c.pair_id);
    reports[i] = metrics::Evaluate(c.pair_id, c.method_id, r->document_text,
                                   r->gold_summary_text, c.text, sel);
  });
  std::string table = metrics::ReportsToCsv(reports);
  if (flags_.out.empty()) {
    out_ << table;
  } else {
    WriteOutput(flags_.out, table);
    WriteOutput(flags_.out + ".jsonl", metrics::ReportsToJsonl(reports));
    out_ << reports.size() << " metric reports written to " << flags_.out << '\n';
  }
  return kExitOk;
}

int Run::Audit() {
  std::vector<corpus::CorpusRecord> records = LoadRecords();
  auto index = Index(records);
  std::vector<CandidateSummary> summaries =
      LoadSummaries(Require(flags_.summaries, "--summaries"));
  const recognizers::Recognizer &recognizer = Recognizer();
  const nli::NliBackend &nli = Nli();
  for (const auto &c : summaries) {
    if (!index.count(c.pair_id)) {
      throw InvalidArgument("summary for unknown pair id '" + c.pair_id + "'");
    }
  }

  std::vector<std::string> lines(summaries.size());
  std::vector<size_t> flagged(summaries.size());
  ParallelFor(summaries.size(), Jobs(), [&](size_t i) {
    const auto &c = summaries[i];
    metrics::AuditReport a = metrics::Audit(index.at(c.pair_id)->document_text, c.text,
                                            recognizer, &nli, flags_.threshold);
    std::vector<std::string> sentences = text::SentenceTexts(c.text);
    json j;
    j["pair_id"] = c.pair_id;
    j["method_id"] = c.method_id;
    j["flagged_sentences"] = json::array();
    for (const auto &f : a.flagged_sentences) {
      j["flagged_sentences"].push_back({{"index", f.sentence_index},
                                        {"nli_score", f.nli_score},
                                        {"text", sentences.at(f.sentence_index)}});
    }
    j["unmatched_entities"] = json::array();
    for (const auto &m : a.unmatched_entities) j["unmatched_entities"].push_back(m.surface);
    j["unmatched_numbers"] = json::array();
    for (const auto &m : a.unmatched_numbers) j["unmatched_numbers"].push_back(m.surface);
    lines[i] = j.dump();
    flagged[i] = a.flagged_sentences.size() + a.unmatched_entities.size() +
                 a.unmatched_numbers.size();
  });
  std::string buf;
  for (const auto &l : lines) buf += l + '\n';
  if (flags_.out.empty()) {
    out_ << buf;
  } else {
    WriteOutput(flags_.out, buf);
    size_t with_findings = 0;
    for (size_t n : flagged) with_findings += n > 0;
    out_ << with_findings << " of " << summaries.size()
         << " summaries have findings; written to " << flags_.out << '\n';
  }
  return kExitOk;
}

int Run::Correct() {
  std::vector<corpus::CorpusRecord> records = LoadRecords();
  auto index = Index(records);
  std::vector<CandidateSummary> summaries =
      LoadSummaries(Require(flags_.summaries, "--in"));
  const std::string &path = Require(flags_.out, "--out");
  const recognizers::Recognizer &recognizer = Recognizer();
  const embedding::Embedder &embedder = Embedder();
  for (const auto &c : summaries) {
    if (!index.count(c.pair_id)) {
      throw InvalidArgument("summary for unknown pair id '" + c.pair_id + "'");
    }
  }

  std::vector<CandidateSummary> corrected(summaries.size());
  std::vector<json> ledgers(summaries.size());
  ParallelFor(summaries.size(), Jobs(), [&](size_t i) {
    const auto &c = summaries[i];
    corrector::Correction fix = corrector::CorrectSummary(
        index.at(c.pair_id)->document_text, c.text, recognizer, embedder);
    CandidateSummary out = c;
    out.method_id = c.method_id + "-corrected";
    out.text = fix.text;
    out.backend_metadata["corrected_from"] = c.method_id;
    out.backend_metadata["replacements"] = fix.ledger.entries.size();
    corrected[i] = std::move(out);
    json l;
    l["pair_id"] = c.pair_id;
    l["method_id"] = c.method_id;
    l["ledger"] = corrector::LedgerToJson(fix.ledger);
    ledgers[i] = std::move(l);
  });

  std::string buf;
  size_t replacements = 0;
  for (const auto &c : corrected) {
    buf += orchestrator::CandidateToJson(c) + '\n';
    replacements += c.backend_metadata["replacements"].get<size_t>();
  }
  WriteOutput(path, buf);
  json all = json::array();
  for (auto &l : ledgers) all.push_back(std::move(l));
  std::string ledger_path = flags_.ledger.empty() ? path + ".ledger.json" : flags_.ledger;
  WriteOutput(ledger_path, all.dump(2) + "\n");
  out_ << replacements << " replacements across " << corrected.size()
       << " summaries; written to " << path << '\n';
  return kExitOk;
}

int Run::Report() {
  if (flags_.reports.empty() && flags_.human.empty()) {
    throw UsageError("report needs --reports and/or --human");
  }
  std::string text_out;
  std::string csv_out;
  if (!flags_.reports.empty()) {
    std::vector<metrics::MetricReport> reports =
        metrics::ReportsFromCsv(ReadInput(flags_.reports));
    evalreport::ComparisonTable table = evalreport::Aggregate(reports, cfg_.families);
    text_out += evalreport::TableToMarkdown(table);
    csv_out += evalreport::TableToCsv(table);
    if (!flags_.compare.empty()) {
      std::vector<std::string> methods = SplitList(flags_.compare);
      if (methods.size() != 2) throw UsageError("--compare takes two method ids A,B");
      auto metric = metrics::ParseMetric(flags_.metric);
      if (!metric) throw UsageError("unknown metric '" + flags_.metric + "'");
      auto [a, b] = evalreport::AlignedValues(reports, methods[0], methods[1], *metric);
      evalreport::TTestResult t = evalreport::PairedTTest(a, b, flags_.alpha);
      text_out += "\npaired t-test " + methods[0] + " > " + methods[1] + " on " +
                  flags_.metric + ": t=" + FormatDouble(t.t, 4) +
                  " p=" + FormatDouble(t.p, 6) + " df=" + std::to_string(t.df) +
                  (t.significant ? " significant\n" : " not significant\n");
    }
  }
  if (!flags_.human.empty()) {
    std::vector<evalreport::HumanEvalSheet> sheets =
        evalreport::ReadHumanEvalCsv(ReadInput(flags_.human));
    if (!text_out.empty()) text_out += "\n";
    text_out += evalreport::HumanEvalToMarkdown(evalreport::HumanEvalAggregate(sheets));
    text_out += "\n| metric | fleiss_kappa |\n|---|---|\n";
    for (auto m : evalreport::kAllHumanMetrics) {
      text_out += "| " + std::string(evalreport::HumanMetricName(m)) + " | " +
                  FormatDouble(evalreport::FleissKappa(sheets, m), 4) + " |\n";
    }
  }
  if (!flags_.out.empty()) {
    WriteOutput(flags_.out, flags_.markdown || csv_out.empty() ? text_out : csv_out);
  }
  out_ << text_out;
  return kExitOk;
}

}  // namespace

int CommandSuite(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Long legal document summarization, evaluation and correction"};
  app.name("veridict");
  app.require_subcommand(1);
  Flags f;
  std::vector<Override> overrides;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--config", f.config_path, "INI config file")->check(CLI::ExistingFile);
    overrides.push_back({sub->add_option("--jobs", f.jobs, "Parallel documents (0: all cores)"),
                         [&](config::RunConfig &c) { c.jobs = f.jobs; }});
  };
  auto corpus_opts = [&](CLI::App *sub) {
    overrides.push_back({sub->add_option("--corpus", f.corpus, "Corpus directory or JSONL"),
                         [&](config::RunConfig &c) { c.corpus_root = f.corpus; }});
    overrides.push_back(
        {sub->add_option("--source", f.source, "in_abs, uk_abs, govreport or generic"),
         [&](config::RunConfig &c) { c.source = f.source; }});
  };
  auto recognizer_opt = [&](CLI::App *sub) {
    overrides.push_back({sub->add_option("--recognizer", f.recognizer, "builtin or sidecar")
                             ->check(CLI::IsMember({"builtin", "sidecar"})),
                         [&](config::RunConfig &c) { c.recognizer = f.recognizer; }});
  };
  auto embedder_opt = [&](CLI::App *sub) {
    overrides.push_back({sub->add_option("--embedder", f.embedder, "builtin or sidecar")
                             ->check(CLI::IsMember({"builtin", "sidecar"})),
                         [&](config::RunConfig &c) { c.embedder = f.embedder; }});
  };
  auto nli_opt = [&](CLI::App *sub) {
    overrides.push_back({sub->add_option("--nli", f.nli, "mock or sidecar")
                             ->check(CLI::IsMember({"mock", "sidecar"})),
                         [&](config::RunConfig &c) { c.nli = f.nli; }});
  };
  auto sidecar_opt = [&](CLI::App *sub) {
    overrides.push_back({sub->add_option("--sidecar-url", f.sidecar_url, "Model sidecar base URL"),
                         [&](config::RunConfig &c) { c.sidecar_url = f.sidecar_url; }});
  };

  CLI::App *ingest = app.add_subcommand("ingest", "Convert a corpus directory to JSONL");
  common(ingest);
  corpus_opts(ingest);
  ingest->add_option("--out", f.out, "Output JSONL")->required();

  CLI::App *stats = app.add_subcommand("stats", "Corpus length statistics");
  common(stats);
  corpus_opts(stats);
  stats->add_flag("--fragments", f.fragments, "Also compute coverage and density");
  stats->add_option("--out", f.out, "Also write the table to this CSV file");

  CLI::App *extract = app.add_subcommand("extract", "CaseSummarizer extractive summaries");
  common(extract);
  corpus_opts(extract);
  recognizer_opt(extract);
  sidecar_opt(extract);
  extract->add_option("--budget-words", f.budget_words,
                      "Word budget per summary (0: gold summary length)");
  extract->add_option("--out", f.out, "Output summaries JSONL")->required();

  CLI::App *summarize = app.add_subcommand("summarize", "Chunked LLM summarization");
  common(summarize);
  corpus_opts(summarize);
  recognizer_opt(summarize);
  sidecar_opt(summarize);
  overrides.push_back({summarize->add_option("--variant", f.variant,
                                             "summ, tldr, explicit, hybrid or rh"),
                       [&](config::RunConfig &c) { c.variant = f.variant; }});
  overrides.push_back({summarize->add_option("--chunk-words", f.chunk_words, "Chunk size K"),
                       [&](config::RunConfig &c) { c.chunk_words = f.chunk_words; }});
  overrides.push_back(
      {summarize->add_option("--min-target-words", f.min_target_words,
                             "Minimum per-chunk target length"),
       [&](config::RunConfig &c) { c.min_target_words = f.min_target_words; }});
  overrides.push_back(
      {summarize->add_option("--backend", f.backend,
                             "mock-echo, mock-truncate or a provider name"),
       [&](config::RunConfig &c) { c.backend = f.backend; }});
  overrides.push_back({summarize->add_option("--base-url", f.base_url, "Chat completions base URL"),
                       [&](config::RunConfig &c) { c.base_url = f.base_url; }});
  overrides.push_back({summarize->add_option("--model", f.model, "Model name"),
                       [&](config::RunConfig &c) { c.model = f.model; }});
  summarize->add_option("--out", f.out, "Output summaries JSONL")->required();

  CLI::App *evaluate = app.add_subcommand("evaluate", "Score summaries against gold");
  common(evaluate);
  corpus_opts(evaluate);
  recognizer_opt(evaluate);
  embedder_opt(evaluate);
  nli_opt(evaluate);
  sidecar_opt(evaluate);
  evaluate->add_option("--summaries", f.summaries, "Summaries JSONL")->required();
  evaluate->add_option("--metrics", f.metrics,
                       "all or a list of rouge,meteor,bertscore,summac,consistency");
  evaluate->add_option("--out", f.out, "Output CSV (JSONL written alongside)");

  CLI::App *audit = app.add_subcommand("audit", "Flag likely hallucinations");
  common(audit);
  corpus_opts(audit);
  recognizer_opt(audit);
  nli_opt(audit);
  sidecar_opt(audit);
  audit->add_option("--summaries", f.summaries, "Summaries JSONL")->required();
  audit->add_option("--threshold", f.threshold, "Entailment threshold");
  audit->add_option("--out", f.out, "Output JSONL");

  CLI::App *correct = app.add_subcommand("correct", "Replace unsupported entities and numbers");
  common(correct);
  corpus_opts(correct);
  recognizer_opt(correct);
  embedder_opt(correct);
  sidecar_opt(correct);
  correct->add_option("--in", f.summaries, "Summaries JSONL")->required();
  correct->add_option("--out", f.out, "Corrected summaries JSONL")->required();
  correct->add_option("--ledger", f.ledger, "Ledger JSON (default: <out>.ledger.json)");

  CLI::App *report = app.add_subcommand("report", "Comparison tables and statistics");
  common(report);
  report->add_option("--reports", f.reports, "Metric report CSV from evaluate");
  report->add_option("--human", f.human, "Human evaluation CSV");
  report->add_option("--compare", f.compare, "Paired t-test between methods A,B");
  report->add_option("--metric", f.metric, "Metric for --compare");
  report->add_option("--alpha", f.alpha, "Significance level");
  report->add_flag("--markdown", f.markdown, "Write markdown instead of CSV to --out");
  report->add_option("--out", f.out, "Output table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    config::RunConfig cfg;
    try {
      if (!f.config_path.empty()) cfg = config::LoadConfig(f.config_path);
      for (const auto &o : overrides) {
        if (o.option->count() > 0) o.apply(cfg);
      }
      cfg.Validate();
      corpus::ParseSource(cfg.source);
    } catch (const InvalidArgument &e) {
      throw UsageError(e.what());
    }
    Run run(command, f, std::move(cfg), out, err);
    return run.Execute();
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace veridict::cli
