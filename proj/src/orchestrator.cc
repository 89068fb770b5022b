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

#include "veridict/orchestrator.h"

#include <atomic>
#include <fstream>
#include <thread>

#include "veridict/chunker.h"
#include "veridict/errors.h"
#include "veridict/textproc.h"

namespace veridict::orchestrator {

using json = nlohmann::json;

std::string_view VariantName(VariantKind kind) {
  switch (kind) {
    case VariantKind::kSumm: return "summ";
    case VariantKind::kTldr: return "tldr";
    case VariantKind::kExplicit: return "explicit";
    case VariantKind::kHybrid: return "hybrid";
    case VariantKind::kReduceHallucination: return "rh";
  }
  return "summ";
}

VariantKind ParseVariant(std::string_view name) {
  if (name == "summ") return VariantKind::kSumm;
  if (name == "tldr") return VariantKind::kTldr;
  if (name == "explicit") return VariantKind::kExplicit;
  if (name == "hybrid") return VariantKind::kHybrid;
  if (name == "rh" || name == "reduce_hallucination") {
    return VariantKind::kReduceHallucination;
  }
  throw InvalidArgument("unknown prompt variant '" + std::string(name) + "'");
}

PromptVariant PromptVariant::Standard(VariantKind kind) {
  switch (kind) {
    case VariantKind::kSumm:
    case VariantKind::kHybrid:
      return {kind, "<text> Summarize the document in <YY> words"};
    case VariantKind::kTldr:
      return {kind, "<text> Tl;Dr"};
    case VariantKind::kExplicit:
      return {kind,
              "Your task is to summarize the following document in at most <YY> "
              "words. The document to be summarized is given within <>. Document "
              "to summarize - <<text>>"};
    case VariantKind::kReduceHallucination:
      return {kind,
              "Your task is to summarize the following document in at most <YY> "
              "words. Output complete sentences and not half sentences. Do not "
              "have hallucinations and inconsistencies in your summary. The "
              "document to be summarized is given within <>. Document to "
              "summarize - <<text>>"};
  }
  return {kind, ""};
}

std::string RenderPrompt(const PromptVariant &variant, std::string_view chunk_text,
                         std::optional<int64_t> target_words) {
  std::string_view tmpl = variant.template_text;
  if (tmpl.find(kTextSlot) == std::string_view::npos) {
    throw InvalidArgument("prompt template lacks the <text> slot");
  }
  if (variant.UsesTargetLength()) {
    if (tmpl.find(kLengthSlot) == std::string_view::npos) {
      throw InvalidArgument("prompt template lacks the <YY> slot");
    }
    if (!target_words || *target_words < 1) {
      throw InvalidArgument("prompt variant needs a target length >= 1");
    }
  }
  std::string out;
  out.reserve(tmpl.size() + chunk_text.size() + 8);
  size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl.compare(i, kTextSlot.size(), kTextSlot) == 0) {
      out += chunk_text;
      i += kTextSlot.size();
    } else if (tmpl.compare(i, kLengthSlot.size(), kLengthSlot) == 0 && target_words) {
      out += std::to_string(*target_words);
      i += kLengthSlot.size();
    } else {
      out += tmpl[i++];
    }
  }
  return out;
}

std::string GenerateWithRetry(const llm::LlmBackend &backend,
                              const llm::GenerationRequest &request,
                              const RetryPolicy &policy, int *attempts_used) {
  auto sleep = policy.sleep ? policy.sleep : [](std::chrono::milliseconds d) {
    std::this_thread::sleep_for(d);
  };
  std::chrono::milliseconds backoff = policy.initial_backoff;
  const int attempts = std::max(1, policy.attempts);
  for (int attempt = 1;; ++attempt) {
    if (attempts_used) *attempts_used = attempt;
    std::chrono::milliseconds wait = backoff;
    try {
      std::string text = backend.Generate(request);
      if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
        throw BackendProtocolError("backend returned an empty completion");
      }
      return text;
    } catch (const llm::RateLimited &e) {
      if (attempt >= attempts) throw;
      wait = std::max(wait, e.retry_after());
    } catch (const BackendUnavailable &) {
      if (attempt >= attempts) throw;
    } catch (const BackendProtocolError &) {
      if (attempt >= attempts) throw;
    }
    sleep(wait);
    backoff = std::chrono::milliseconds(
        static_cast<int64_t>(static_cast<double>(backoff.count()) * policy.multiplier));
  }
}

std::string CandidateToJson(const CandidateSummary &c) {
  nlohmann::ordered_json j;
  j["pair_id"] = c.pair_id;
  j["method_id"] = c.method_id;
  j["text"] = c.text;
  j["chunk_targets"] = c.chunk_targets;
  j["backend_metadata"] = c.backend_metadata;
  return j.dump();
}

CandidateSummary CandidateFromJson(std::string_view line) {
  try {
    json j = json::parse(line);
    CandidateSummary c;
    c.pair_id = j.at("pair_id").get<std::string>();
    c.method_id = j.at("method_id").get<std::string>();
    c.text = text::NormalizeNfc(j.at("text").get<std::string>());
    if (j.contains("chunk_targets")) {
      c.chunk_targets = j["chunk_targets"].get<std::vector<int64_t>>();
    }
    if (j.contains("backend_metadata")) c.backend_metadata = j["backend_metadata"];
    return c;
  } catch (const json::exception &e) {
    throw InvalidArgument(std::string("malformed summary record: ") + e.what());
  }
}

std::vector<CandidateSummary> ReadCandidates(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot read summaries");
  std::vector<CandidateSummary> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(CandidateFromJson(line));
  }
  return out;
}

void WriteCandidates(const std::string &path, const std::vector<CandidateSummary> &cs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot write summaries");
  for (const auto &c : cs) out << CandidateToJson(c) << '\n';
  if (!out) throw IoError(path, "write failed");
}

std::string MethodId(const OrchestratorOptions &options, VariantKind kind) {
  std::string id = options.backend_name + "-" + std::string(VariantName(kind));
  if (kind != VariantKind::kHybrid) id += "-" + std::to_string(options.chunk_words);
  return id;
}

namespace {

struct ChunkOutcome {
  std::string text;
  int attempts = 0;
  std::string error;
  bool unavailable = false;
  bool ok = false;
};

// Runs fn(i) for i in [0, n) on up to `workers` threads.
template <typename Fn>
void ParallelFor(size_t n, size_t workers, Fn fn) {
  workers = std::max<size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> threads;
  for (size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&]() {
      for (size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto &t : threads) t.join();
}

std::vector<ChunkOutcome> RunPrompts(const std::vector<std::string> &prompts,
                                     const std::vector<int64_t> &targets,
                                     const OrchestratorOptions &options,
                                     const llm::LlmBackend &backend) {
  std::vector<ChunkOutcome> outcomes(prompts.size());
  ParallelFor(prompts.size(), options.max_concurrency, [&](size_t i) {
    llm::GenerationRequest req;
    req.prompt = prompts[i];
    req.max_response_tokens = text::TokensForWords(targets[i]);
    req.backend_id = backend.Id();
    req.temperature = options.temperature;
    ChunkOutcome &out = outcomes[i];
    try {
      if (options.rate_limiter) options.rate_limiter->Acquire();
      out.text = GenerateWithRetry(backend, req, options.retry, &out.attempts);
      out.ok = true;
    } catch (const BackendUnavailable &e) {
      out.error = e.what();
      out.unavailable = true;
    } catch (const Error &e) {
      out.error = e.what();
    }
  });
  return outcomes;
}

CandidateSummary Assemble(const corpus::CorpusRecord &record, std::string method_id,
                          const std::vector<int64_t> &targets,
                          const std::vector<ChunkOutcome> &outcomes,
                          json metadata) {
  std::vector<size_t> failed;
  bool all_unavailable = true;
  std::string first_error;
  int attempts = 0;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    attempts += outcomes[i].attempts;
    if (!outcomes[i].ok) {
      failed.push_back(i);
      all_unavailable = all_unavailable && outcomes[i].unavailable;
      if (first_error.empty()) first_error = outcomes[i].error;
    }
  }
  if (!failed.empty()) {
    std::string msg = "summarizing '" + record.id + "' failed for chunk(s)";
    for (size_t i : failed) msg += " " + std::to_string(i);
    msg += ": " + first_error;
    if (failed.size() == outcomes.size() && all_unavailable) {
      throw BackendUnavailable(msg);
    }
    throw PartialFailure(msg, failed);
  }
  CandidateSummary c;
  c.pair_id = record.id;
  c.method_id = std::move(method_id);
  c.chunk_targets = targets;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (i) c.text += kChunkJoin;
    c.text += outcomes[i].text;
  }
  metadata["attempts"] = attempts;
  c.backend_metadata = std::move(metadata);
  return c;
}

}  // namespace

CandidateSummary SummarizeDocument(const corpus::CorpusRecord &record,
                                   const PromptVariant &variant,
                                   const OrchestratorOptions &options,
                                   const llm::LlmBackend &backend) {
  chunker::ChunkOptions copts;
  copts.min_target_words = options.min_target_words;
  int64_t gold = static_cast<int64_t>(text::CountWords(record.gold_summary_text));
  chunker::ChunkPlan plan =
      chunker::PlanChunks(record.document_text, options.chunk_words, gold, copts);
  std::vector<std::string> prompts;
  std::vector<int64_t> targets;
  for (const auto &chunk : plan.chunks) {
    std::optional<int64_t> yy;
    if (variant.UsesTargetLength()) yy = chunk.target_words;
    prompts.push_back(RenderPrompt(variant, chunk.text, yy));
    targets.push_back(chunk.target_words);
  }
  json meta = {{"backend", backend.Id()},
               {"variant", VariantName(variant.kind)},
               {"chunk_words", options.chunk_words},
               {"chunks", plan.chunks.size()},
               {"temperature", options.temperature}};
  return Assemble(record, MethodId(options, variant.kind), targets,
                  RunPrompts(prompts, targets, options, backend), std::move(meta));
}

CandidateSummary HybridSummarize(const corpus::CorpusRecord &record,
                                 const OrchestratorOptions &options,
                                 const llm::LlmBackend &backend) {
  std::optional<extractive::TfidfTable> local;
  const extractive::TfidfTable *tfidf = options.tfidf;
  if (tfidf == nullptr) {
    local = extractive::TfidfTable::Build({record.document_text});
    tfidf = &*local;
  }
  recognizers::BuiltinRecognizer builtin;
  const recognizers::Recognizer &recognizer =
      options.recognizer ? *options.recognizer : builtin;
  extractive::ExtractiveSummary extract =
      extractive::CaseSummarize(record.document_text, options.hybrid_extract_words,
                                *tfidf, options.weights, recognizer);

  int64_t doc_words = static_cast<int64_t>(text::CountWords(record.document_text));
  int64_t gold = static_cast<int64_t>(text::CountWords(record.gold_summary_text));
  if (gold < 1) throw InvalidArgument("gold length must be >= 1");
  int64_t target = chunker::AllocateTargetLength(doc_words, gold, doc_words,
                                                 options.min_target_words);
  std::vector<std::string> prompts = {
      RenderPrompt(PromptVariant::Standard(VariantKind::kHybrid), extract.text, target)};
  std::vector<int64_t> targets = {target};
  json meta = {{"backend", backend.Id()},
               {"variant", "hybrid"},
               {"extract_words", extract.word_count},
               {"extract_sentences", extract.selected.size()},
               {"temperature", options.temperature}};
  return Assemble(record, MethodId(options, VariantKind::kHybrid), targets,
                  RunPrompts(prompts, targets, options, backend), std::move(meta));
}

CandidateSummary Summarize(const corpus::CorpusRecord &record, VariantKind kind,
                           const OrchestratorOptions &options,
                           const llm::LlmBackend &backend) {
  if (kind == VariantKind::kHybrid) return HybridSummarize(record, options, backend);
  return SummarizeDocument(record, PromptVariant::Standard(kind), options, backend);
}

}  // namespace veridict::orchestrator
