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

#ifndef VERIDICT_TESTS_TEST_SUPPORT_H_
#define VERIDICT_TESTS_TEST_SUPPORT_H_

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "veridict/corpus.h"
#include "veridict/embedding.h"

namespace veridict::testing {

std::string DataPath(const std::string &relative);
std::string FixtureCorpusRoot();
std::vector<corpus::CorpusRecord> FixtureCorpus();

std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, const std::string &content);

// Fresh empty directory under the system temp dir; removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  const std::string &path() const { return path_; }
  std::string File(const std::string &name) const { return path_ + "/" + name; }

 private:
  std::string path_;
};

// Words drawn from a small legal vocabulary, with sentence punctuation,
// capitalized names and numbers sprinkled in.
std::string RandomText(std::mt19937 &rng, size_t words);
// Whitespace-separated tokens over `alphabet`.
std::string RandomTokens(std::mt19937 &rng, size_t n, const std::vector<std::string> &alphabet);

// Maps each distinct text to its own basis vector; cosine is 1 for equal
// texts and 0 otherwise.
class OneHotEmbedder : public embedding::Embedder {
 public:
  std::vector<embedding::Vector> Embed(const std::vector<std::string> &texts) const override;
  std::string Id() const override { return "one-hot"; }

 private:
  mutable std::vector<std::string> vocab_;
};

// httplib server on an ephemeral localhost port, running on a background
// thread for the lifetime of the object.
class FakeServer {
 public:
  FakeServer();
  ~FakeServer();
  httplib::Server &server() { return server_; }
  // Call after registering handlers.
  void Start();
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace veridict::testing

#endif  // VERIDICT_TESTS_TEST_SUPPORT_H_
