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

#include "veridict/llm_backend.h"

#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "veridict/sidecar_client.h"
#include "veridict/textproc.h"

namespace veridict::llm {

using json = nlohmann::json;

ChatCompletionsBackend::ChatCompletionsBackend(std::string base_url, std::string model,
                                               std::string api_key,
                                               std::chrono::seconds timeout)
    : base_url_(std::move(base_url)),
      model_(std::move(model)),
      api_key_(std::move(api_key)),
      timeout_(timeout) {}

std::string ChatCompletionsBackend::Generate(const GenerationRequest &request) const {
  UrlParts url = SplitUrl(base_url_);
  httplib::Client client(url.origin);
  client.set_connection_timeout(std::chrono::seconds(30));
  client.set_read_timeout(timeout_);
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
  json body = {{"model", model_},
               {"messages", json::array({{{"role", "user"}, {"content", request.prompt}}})},
               {"max_tokens", request.max_response_tokens},
               {"temperature", request.temperature}};
  auto res = client.Post(url.path_prefix + "/chat/completions", headers, body.dump(),
                         "application/json");
  if (!res) {
    throw BackendUnavailable("LLM backend " + base_url_ + " unreachable: " +
                             httplib::to_string(res.error()));
  }
  if (res->status == 429) {
    std::chrono::milliseconds wait(0);
    if (res->has_header("Retry-After")) {
      try {
        wait = std::chrono::milliseconds(
            static_cast<int64_t>(std::stod(res->get_header_value("Retry-After")) * 1000));
      } catch (const std::exception &) {
      }
    }
    throw RateLimited("LLM backend rate limited the request", wait);
  }
  if (res->status >= 500 || res->status == 408) {
    throw BackendUnavailable("LLM backend returned HTTP " + std::to_string(res->status));
  }
  if (res->status != 200) {
    throw RequestRejected("LLM backend rejected the request: HTTP " +
                          std::to_string(res->status) + " " + res->body);
  }
  try {
    json j = json::parse(res->body);
    const json &content = j.at("choices").at(0).at("message").at("content");
    if (content.is_null()) return "";
    return content.get<std::string>();
  } catch (const json::exception &e) {
    throw BackendProtocolError(std::string("malformed chat completion: ") + e.what());
  }
}

MockLlmBackend::MockLlmBackend(Mode mode, std::string id)
    : mode_(mode), id_(std::move(id)) {}

std::string MockLlmBackend::Generate(const GenerationRequest &request) const {
  if (mode_ == Mode::kEcho) return request.prompt;
  const size_t budget =
      static_cast<size_t>(std::max<int64_t>(0, text::WordsFromTokens(request.max_response_tokens)));
  std::string out;
  size_t words = 0;
  for (const auto &sentence : text::SentenceTexts(request.prompt)) {
    size_t n = text::CountWords(sentence);
    if (!out.empty() && words + n > budget) break;
    if (!out.empty()) out += ' ';
    out += sentence;
    words += n;
  }
  return out;
}

RateLimiter::RateLimiter(double per_second) {
  if (per_second > 0.0) {
    interval_ = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(1.0 / per_second));
  }
}

void RateLimiter::Acquire() {
  if (interval_ == std::chrono::steady_clock::duration::zero()) return;
  std::chrono::steady_clock::time_point start;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto now = std::chrono::steady_clock::now();
    start = std::max(now, next_);
    next_ = start + interval_;
  }
  std::this_thread::sleep_until(start);
}

}  // namespace veridict::llm
