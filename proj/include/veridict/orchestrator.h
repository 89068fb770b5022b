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

#ifndef VERIDICT_ORCHESTRATOR_H_
#define VERIDICT_ORCHESTRATOR_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "veridict/corpus.h"
#include "veridict/extractive.h"
#include "veridict/llm_backend.h"
#include "veridict/recognizers.h"

namespace veridict::orchestrator {

enum class VariantKind { kSumm, kTldr, kExplicit, kHybrid, kReduceHallucination };

// CLI names: summ, tldr, explicit, hybrid, rh.
std::string_view VariantName(VariantKind kind);
VariantKind ParseVariant(std::string_view name);

// A prompt template with `<text>` and `<YY>` slots.
struct PromptVariant {
  VariantKind kind = VariantKind::kSumm;
  std::string template_text;

  // The built-in template for a kind. Hybrid uses the summ template for its
  // abstractive stage.
  static PromptVariant Standard(VariantKind kind);

  bool UsesTargetLength() const { return kind != VariantKind::kTldr; }
};

inline constexpr std::string_view kTextSlot = "<text>";
inline constexpr std::string_view kLengthSlot = "<YY>";

// Substitutes the slots in one left-to-right pass; slot markers inside the
// substituted text are left alone. Throws InvalidArgument when the template
// lacks a required slot or the target length is missing or < 1.
std::string RenderPrompt(const PromptVariant &variant, std::string_view chunk_text,
                         std::optional<int64_t> target_words);

struct RetryPolicy {
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{1000};
  double multiplier = 2.0;
  // Injectable for tests; defaults to std::this_thread::sleep_for.
  std::function<void(std::chrono::milliseconds)> sleep;
};

// Calls the backend, retrying retryable failures (unavailable, rate limited,
// malformed or empty output) with exponential backoff. Rate-limit delays
// longer than the current backoff are honored.
std::string GenerateWithRetry(const llm::LlmBackend &backend,
                              const llm::GenerationRequest &request,
                              const RetryPolicy &policy, int *attempts_used = nullptr);

struct CandidateSummary {
  std::string pair_id;
  std::string method_id;
  std::string text;
  std::vector<int64_t> chunk_targets;
  nlohmann::json backend_metadata = nlohmann::json::object();
};

std::string CandidateToJson(const CandidateSummary &c);
CandidateSummary CandidateFromJson(std::string_view line);
std::vector<CandidateSummary> ReadCandidates(const std::string &path);
void WriteCandidates(const std::string &path, const std::vector<CandidateSummary> &cs);

struct OrchestratorOptions {
  size_t chunk_words = 1024;
  int64_t min_target_words = 30;
  size_t max_concurrency = 4;
  double temperature = 0.0;
  // Name used in method ids, e.g. "chatgpt" -> "chatgpt-summ-1024".
  std::string backend_name = "llm";
  RetryPolicy retry;
  llm::RateLimiter *rate_limiter = nullptr;
  // Hybrid stage 1 inputs. A null table means "build from the document".
  const extractive::TfidfTable *tfidf = nullptr;
  extractive::BoostWeights weights;
  const recognizers::Recognizer *recognizer = nullptr;
  size_t hybrid_extract_words = 1500;
};

// Separator between chunk summaries.
inline constexpr std::string_view kChunkJoin = "\n\n";

// Chunks the document, prompts the backend once per chunk with
// max_tokens = ceil(target / 0.75), and joins the outputs in chunk order.
// Throws PartialFailure naming the failed chunks, or BackendUnavailable when
// every chunk failed because the backend was unreachable.
CandidateSummary SummarizeDocument(const corpus::CorpusRecord &record,
                                   const PromptVariant &variant,
                                   const OrchestratorOptions &options,
                                   const llm::LlmBackend &backend);

// Stage 1: CaseSummarizer extract of at most hybrid_extract_words words in
// document order. Stage 2: one summ prompt over the extract with YY equal to
// the whole-document target length.
CandidateSummary HybridSummarize(const corpus::CorpusRecord &record,
                                 const OrchestratorOptions &options,
                                 const llm::LlmBackend &backend);

// Dispatches on the variant kind.
CandidateSummary Summarize(const corpus::CorpusRecord &record, VariantKind kind,
                           const OrchestratorOptions &options,
                           const llm::LlmBackend &backend);

std::string MethodId(const OrchestratorOptions &options, VariantKind kind);

}  // namespace veridict::orchestrator

#endif  // VERIDICT_ORCHESTRATOR_H_
