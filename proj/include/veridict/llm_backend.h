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

#ifndef VERIDICT_LLM_BACKEND_H_
#define VERIDICT_LLM_BACKEND_H_

#include <chrono>
#include <cstdint>
#include <mutex>
#include <string>

#include "veridict/errors.h"

namespace veridict::llm {

struct GenerationRequest {
  std::string prompt;
  int64_t max_response_tokens = 1;
  std::string backend_id;
  double temperature = 0.0;
};

// HTTP 429. Retryable after the advertised delay.
class RateLimited : public BackendUnavailable {
 public:
  RateLimited(const std::string &what, std::chrono::milliseconds retry_after)
      : BackendUnavailable(what), retry_after_(retry_after) {}
  std::chrono::milliseconds retry_after() const { return retry_after_; }

 private:
  std::chrono::milliseconds retry_after_;
};

// A 4xx answer other than 408/429; retrying the same request cannot help.
class RequestRejected : public Error {
 public:
  using Error::Error;
};

// Text generation backend. Implementations must be safe to call from several
// threads at once.
class LlmBackend {
 public:
  virtual ~LlmBackend() = default;
  // Returns the generated text. Throws BackendUnavailable (retryable),
  // BackendProtocolError (retryable) or RequestRejected.
  virtual std::string Generate(const GenerationRequest &request) const = 0;
  virtual std::string Id() const = 0;
};

// OpenAI-style chat completions: POST <base_url>/chat/completions with
// {model, messages:[{role:"user", content}], max_tokens, temperature}.
class ChatCompletionsBackend : public LlmBackend {
 public:
  ChatCompletionsBackend(std::string base_url, std::string model, std::string api_key,
                         std::chrono::seconds timeout = std::chrono::seconds(300));
  std::string Generate(const GenerationRequest &request) const override;
  std::string Id() const override { return model_; }

 private:
  std::string base_url_;
  std::string model_;
  std::string api_key_;
  std::chrono::seconds timeout_;
};

// Deterministic stand-in for a real model.
//  kEcho:     returns the prompt unchanged.
//  kTruncate: returns the leading whole sentences of the prompt that fit in
//             round(0.75 * max_tokens) words (always at least one sentence).
class MockLlmBackend : public LlmBackend {
 public:
  enum class Mode { kEcho, kTruncate };
  explicit MockLlmBackend(Mode mode, std::string id = "mock");
  std::string Generate(const GenerationRequest &request) const override;
  std::string Id() const override { return id_; }

 private:
  Mode mode_;
  std::string id_;
};

// Spaces out calls to at most `per_second` starts per second (0 = no limit).
class RateLimiter {
 public:
  explicit RateLimiter(double per_second = 0.0);
  void Acquire();

 private:
  std::mutex mu_;
  std::chrono::steady_clock::duration interval_{};
  std::chrono::steady_clock::time_point next_{};
};

}  // namespace veridict::llm

#endif  // VERIDICT_LLM_BACKEND_H_
