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

#include "veridict/config.h"

#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "veridict/errors.h"

namespace veridict::config {

namespace pt = boost::property_tree;

namespace {

template <typename T>
void Read(const pt::ptree &tree, const char *key, T *field) {
  try {
    if (auto node = tree.get_child_optional(key)) *field = node->get_value<T>();
  } catch (const pt::ptree_error &e) {
    throw InvalidArgument(std::string("bad config value for ") + key + ": " + e.what());
  }
}

}  // namespace

void RunConfig::Validate() const {
  if (chunk_words < 32) throw InvalidArgument("chunk size must be >= 32 words");
  if (min_target_words < 1) throw InvalidArgument("minimum target length must be >= 1");
  if (jobs < 0) throw InvalidArgument("concurrency bound must be >= 0");
  if (extract_words < 1) throw InvalidArgument("extract budget must be >= 1");
  if (requests_per_second < 0) throw InvalidArgument("request rate must be >= 0");
  if (recognizer != "builtin" && recognizer != "sidecar") {
    throw InvalidArgument("recognizer must be builtin or sidecar");
  }
  if (embedder != "builtin" && embedder != "sidecar") {
    throw InvalidArgument("embedder must be builtin or sidecar");
  }
  if (nli != "mock" && nli != "sidecar") throw InvalidArgument("nli must be mock or sidecar");
  bool mock = backend == "mock-echo" || backend == "mock-truncate";
  if (!mock && (base_url.empty() || model.empty())) {
    throw InvalidArgument("backend '" + backend + "' needs a base URL and a model");
  }
}

nlohmann::ordered_json RunConfig::ToJson() const {
  nlohmann::ordered_json j;
  j["corpus_root"] = corpus_root;
  j["source"] = source;
  j["backend"] = backend;
  j["base_url"] = base_url;
  j["model"] = model;
  j["api_key_env"] = api_key_env;
  j["requests_per_second"] = requests_per_second;
  j["temperature"] = temperature;
  j["chunk_words"] = chunk_words;
  j["min_target_words"] = min_target_words;
  j["variant"] = variant;
  j["jobs"] = jobs;
  j["recognizer"] = recognizer;
  j["embedder"] = embedder;
  j["nli"] = nli;
  j["sidecar_url"] = sidecar_url;
  j["date_boost"] = weights.date;
  j["entity_boost"] = weights.entity;
  j["heading_boost"] = weights.heading;
  j["heading_window"] = weights.heading_window;
  j["extract_words"] = extract_words;
  j["families"] = families;
  return j;
}

RunConfig ParseConfig(const std::string &ini_text) {
  pt::ptree tree;
  std::istringstream in(ini_text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error &e) {
    throw InvalidArgument(std::string("malformed config: ") + e.what());
  }
  RunConfig c;
  Read(tree, "corpus.root", &c.corpus_root);
  Read(tree, "corpus.source", &c.source);
  Read(tree, "backend.name", &c.backend);
  Read(tree, "backend.base_url", &c.base_url);
  Read(tree, "backend.model", &c.model);
  Read(tree, "backend.api_key_env", &c.api_key_env);
  Read(tree, "backend.requests_per_second", &c.requests_per_second);
  Read(tree, "backend.temperature", &c.temperature);
  Read(tree, "summarize.chunk_words", &c.chunk_words);
  Read(tree, "summarize.min_target_words", &c.min_target_words);
  Read(tree, "summarize.variant", &c.variant);
  Read(tree, "summarize.jobs", &c.jobs);
  Read(tree, "evaluate.recognizer", &c.recognizer);
  Read(tree, "evaluate.embedder", &c.embedder);
  Read(tree, "evaluate.nli", &c.nli);
  Read(tree, "evaluate.sidecar_url", &c.sidecar_url);
  Read(tree, "case_summarizer.date_boost", &c.weights.date);
  Read(tree, "case_summarizer.entity_boost", &c.weights.entity);
  Read(tree, "case_summarizer.heading_boost", &c.weights.heading);
  Read(tree, "case_summarizer.heading_window", &c.weights.heading_window);
  Read(tree, "case_summarizer.extract_words", &c.extract_words);
  Read(tree, "output.dir", &c.output_dir);
  if (auto fam = tree.get_child_optional("families")) {
    for (const auto &[method, node] : *fam) c.families[method] = node.data();
  }
  return c;
}

RunConfig LoadConfig(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot read config");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

}  // namespace veridict::config
