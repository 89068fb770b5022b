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

#include <atomic>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_support.h"

namespace veridict::llm {
namespace {

using json = nlohmann::json;
using testing::FakeServer;

json Completion(const std::string &content) {
  return {{"choices", json::array({{{"message", {{"role", "assistant"}, {"content", content}}}}})}};
}

TEST(ChatCompletions, SendsExpectedRequest) {
  FakeServer s;
  json seen;
  std::string auth;
  s.server().Post("/v1/chat/completions", [&](const httplib::Request &req, httplib::Response &res) {
    seen = json::parse(req.body);
    auth = req.get_header_value("Authorization");
    res.set_content(Completion("The appeal fails.").dump(), "application/json");
  });
  s.Start();
  ChatCompletionsBackend b(s.url() + "/v1", "gpt-test", "sk-123", std::chrono::seconds(5));
  GenerationRequest r;
  r.prompt = "Summarize this.";
  r.max_response_tokens = 42;
  EXPECT_EQ(b.Generate(r), "The appeal fails.");
  EXPECT_EQ(auth, "Bearer sk-123");
  EXPECT_EQ(seen["model"], "gpt-test");
  EXPECT_EQ(seen["max_tokens"], 42);
  EXPECT_DOUBLE_EQ(seen["temperature"].get<double>(), 0.0);
  ASSERT_EQ(seen["messages"].size(), 1u);
  EXPECT_EQ(seen["messages"][0]["role"], "user");
  EXPECT_EQ(seen["messages"][0]["content"], "Summarize this.");
  EXPECT_EQ(b.Id(), "gpt-test");
}

TEST(ChatCompletions, ErrorClassification) {
  FakeServer s;
  s.server().Post("/limited/chat/completions", [](const httplib::Request &, httplib::Response &res) {
    res.status = 429;
    res.set_header("Retry-After", "2");
  });
  s.server().Post("/down/chat/completions", [](const httplib::Request &, httplib::Response &res) {
    res.status = 502;
  });
  s.server().Post("/reject/chat/completions", [](const httplib::Request &, httplib::Response &res) {
    res.status = 400;
    res.set_content(R"({"error":"context too long"})", "application/json");
  });
  s.server().Post("/garbage/chat/completions", [](const httplib::Request &, httplib::Response &res) {
    res.set_content(R"({"choices":[]})", "application/json");
  });
  s.Start();
  GenerationRequest r;
  r.prompt = "x";
  try {
    ChatCompletionsBackend(s.url() + "/limited", "m", "").Generate(r);
    FAIL() << "expected RateLimited";
  } catch (const RateLimited &e) {
    EXPECT_EQ(e.retry_after(), std::chrono::milliseconds(2000));
  }
  EXPECT_THROW(ChatCompletionsBackend(s.url() + "/down", "m", "").Generate(r), BackendUnavailable);
  EXPECT_THROW(ChatCompletionsBackend(s.url() + "/reject", "m", "").Generate(r), RequestRejected);
  EXPECT_THROW(ChatCompletionsBackend(s.url() + "/garbage", "m", "").Generate(r),
               BackendProtocolError);
  EXPECT_THROW(ChatCompletionsBackend("http://127.0.0.1:1", "m", "", std::chrono::seconds(2))
                   .Generate(r),
               BackendUnavailable);
}

TEST(MockBackend, EchoAndTruncate) {
  GenerationRequest r;
  r.prompt = "One two three. Four five six. Seven eight nine.";
  r.max_response_tokens = 8;  // 6 words
  EXPECT_EQ(MockLlmBackend(MockLlmBackend::Mode::kEcho).Generate(r), r.prompt);
  EXPECT_EQ(MockLlmBackend(MockLlmBackend::Mode::kTruncate).Generate(r),
            "One two three. Four five six.");
  r.max_response_tokens = 1;
  EXPECT_EQ(MockLlmBackend(MockLlmBackend::Mode::kTruncate).Generate(r), "One two three.");
}

TEST(RateLimiter, SpacesCalls) {
  RateLimiter lim(50.0);
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 6; ++i) lim.Acquire();
  auto elapsed = std::chrono::steady_clock::now() - t0;
  EXPECT_GE(elapsed, std::chrono::milliseconds(95));
  RateLimiter none(0.0);
  for (int i = 0; i < 1000; ++i) none.Acquire();
}

}  // namespace
}  // namespace veridict::llm
