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

#include "veridict/sidecar_client.h"

#include <atomic>
#include <memory>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_support.h"
#include "veridict/embedding.h"
#include "veridict/errors.h"
#include "veridict/nli.h"
#include "veridict/recognizers.h"

namespace veridict {
namespace {

using json = nlohmann::json;
using testing::FakeServer;

void Reply(httplib::Response &res, const json &payload) {
  json env = {{"model_id", "fake-model"}, {"elapsed_ms", 1}, {"payload", payload}};
  res.set_content(env.dump(), "application/json");
}

std::shared_ptr<const SidecarClient> Client(const FakeServer &s) {
  return std::make_shared<SidecarClient>(s.url(), std::chrono::seconds(5));
}

TEST(SplitUrl, OriginAndPrefix) {
  UrlParts p = SplitUrl("http://host:8750/v1/api/");
  EXPECT_EQ(p.origin, "http://host:8750");
  EXPECT_EQ(p.path_prefix, "/v1/api");
  EXPECT_EQ(SplitUrl("http://host").path_prefix, "");
}

TEST(SidecarClient, EnvelopeAndFlatBodies) {
  FakeServer s;
  s.server().Post("/env", [](const httplib::Request &, httplib::Response &res) {
    Reply(res, {{"x", 1}});
  });
  s.server().Post("/flat", [](const httplib::Request &, httplib::Response &res) {
    res.set_content(R"({"x":2})", "application/json");
  });
  s.server().Post("/anon", [](const httplib::Request &, httplib::Response &res) {
    res.set_content(R"({"model_id":"","elapsed_ms":1,"payload":{}})", "application/json");
  });
  s.Start();
  auto c = Client(s);
  EXPECT_EQ(c->Post("/env", json::object())["x"], 1);
  EXPECT_EQ(c->Post("/flat", json::object())["x"], 2);
  EXPECT_THROW(c->Post("/anon", json::object()), BackendProtocolError);
}

TEST(SidecarClient, ErrorClassification) {
  FakeServer s;
  s.server().Post("/bad", [](const httplib::Request &, httplib::Response &res) {
    res.status = 422;
    res.set_content("{}", "application/json");
  });
  s.server().Post("/down", [](const httplib::Request &, httplib::Response &res) {
    res.status = 503;
  });
  s.server().Post("/garbage", [](const httplib::Request &, httplib::Response &res) {
    res.set_content("not json", "text/plain");
  });
  s.Start();
  auto c = Client(s);
  EXPECT_THROW(c->Post("/bad", json::object()), BackendProtocolError);
  EXPECT_THROW(c->Post("/down", json::object()), BackendUnavailable);
  EXPECT_THROW(c->Post("/garbage", json::object()), BackendProtocolError);

  SidecarClient nowhere("http://127.0.0.1:1", std::chrono::seconds(2));
  EXPECT_THROW(nowhere.Post("/ner", json::object()), BackendUnavailable);
}

TEST(SidecarEmbedder, BatchesAndCaches) {
  FakeServer s;
  std::atomic<int> calls{0};
  std::atomic<size_t> largest{0};
  s.server().Post("/embed", [&](const httplib::Request &req, httplib::Response &res) {
    ++calls;
    json body = json::parse(req.body);
    auto texts = body.at("texts").get<std::vector<std::string>>();
    largest = std::max(largest.load(), texts.size());
    json vecs = json::array();
    for (const auto &t : texts) vecs.push_back({static_cast<double>(t.size()), 1.0});
    Reply(res, {{"vectors", vecs}});
  });
  s.Start();
  embedding::SidecarEmbedder emb(Client(s));
  std::vector<std::string> texts;
  for (int i = 0; i < 600; ++i) texts.push_back(std::string(static_cast<size_t>(i % 300 + 1), 'a') + std::to_string(i));
  auto v = emb.Embed(texts);
  ASSERT_EQ(v.size(), texts.size());
  EXPECT_EQ(calls.load(), 3);
  EXPECT_LE(largest.load(), embedding::SidecarEmbedder::kMaxBatch);
  EXPECT_DOUBLE_EQ(v[5][0], static_cast<double>(texts[5].size()));
  emb.Embed({texts[0], texts[1]});
  EXPECT_EQ(calls.load(), 3);
}

TEST(SidecarEmbedder, CountMismatchIsProtocolError) {
  FakeServer s;
  s.server().Post("/embed", [](const httplib::Request &, httplib::Response &res) {
    Reply(res, {{"vectors", json::array({{1.0}})}});
  });
  s.Start();
  embedding::SidecarEmbedder emb(Client(s));
  EXPECT_THROW(emb.Embed({"a", "b"}), BackendProtocolError);
}

TEST(RemoteRecognizer, CodePointSpansAndCache) {
  FakeServer s;
  std::atomic<int> calls{0};
  s.server().Post("/ner", [&](const httplib::Request &req, httplib::Response &res) {
    ++calls;
    EXPECT_EQ(json::parse(req.body).at("text"), "Café Müller met Aiyar.");
    // Code-point offsets: "Müller" is [5, 11), "Aiyar" is [16, 21).
    Reply(res, {{"mentions",
                 json::array({{{"start", 5}, {"end", 11}, {"kind", "named_entity"}},
                              {{"start", 16}, {"end", 21}}})}});
  });
  s.Start();
  recognizers::RemoteRecognizer rec(Client(s));
  const std::string text = "Café Müller met Aiyar.";
  auto ents = rec.ExtractEntities(text);
  ASSERT_EQ(ents.size(), 2u);
  EXPECT_EQ(ents[0].surface, "Müller");
  EXPECT_EQ(text.substr(ents[0].start, ents[0].end - ents[0].start), "Müller");
  EXPECT_EQ(ents[1].surface, "Aiyar");
  rec.ExtractEntities(text);
  EXPECT_EQ(calls.load(), 1);
}

TEST(RemoteRecognizer, BadSpanIsProtocolError) {
  FakeServer s;
  s.server().Post("/ner", [](const httplib::Request &, httplib::Response &res) {
    Reply(res, {{"mentions", json::array({{{"start", 2}, {"end", 99}}})}});
  });
  s.Start();
  recognizers::RemoteRecognizer rec(Client(s));
  EXPECT_THROW(rec.ExtractEntities("short"), BackendProtocolError);
}

TEST(SidecarNli, ScoresValidatedAndCached) {
  FakeServer s;
  std::atomic<int> calls{0};
  s.server().Post("/nli", [&](const httplib::Request &req, httplib::Response &res) {
    ++calls;
    json body = json::parse(req.body);
    if (body.at("hypothesis") == "broken") {
      Reply(res, {{"entail", 0.9}, {"neutral", 0.9}, {"contradict", 0.0}});
      return;
    }
    Reply(res, {{"entail", 0.7}, {"neutral", 0.2}, {"contradict", 0.1}});
  });
  s.Start();
  nli::SidecarNli nli(Client(s));
  nli::NliScores sc = nli.Score("p", "h");
  EXPECT_DOUBLE_EQ(sc.entail, 0.7);
  EXPECT_DOUBLE_EQ(sc.contradict, 0.1);
  nli.Score("p", "h");
  EXPECT_EQ(calls.load(), 1);
  EXPECT_THROW(nli.Score("p", "broken"), BackendProtocolError);
}

}  // namespace
}  // namespace veridict
