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

#ifndef VERIDICT_CONFIG_H_
#define VERIDICT_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"
#include "veridict/extractive.h"

namespace veridict::config {

// Settings shared by all commands. Loaded from an INI file; command-line
// flags override individual fields afterwards.
struct RunConfig {
  std::string corpus_root;
  std::string source = "generic";

  // Backend: "mock-echo", "mock-truncate", or a chat-completions provider
  // name (used as the method id prefix).
  std::string backend = "mock-echo";
  std::string base_url;
  std::string model;
  std::string api_key_env = "VERIDICT_API_KEY";
  double requests_per_second = 0.0;
  double temperature = 0.0;

  int64_t chunk_words = 1024;
  int64_t min_target_words = 30;
  std::string variant = "summ";
  int64_t jobs = 0;  // 0: number of processors

  std::string recognizer = "builtin";
  std::string embedder = "builtin";
  std::string nli = "mock";
  std::string sidecar_url = "http://127.0.0.1:8750";

  extractive::BoostWeights weights;
  int64_t extract_words = 1500;

  std::map<std::string, std::string> families;  // method id -> family
  std::string output_dir = ".";

  // Throws InvalidArgument when a field is out of range (K < 32, ...).
  void Validate() const;
  // Stable rendering for run manifests; never contains secrets.
  nlohmann::ordered_json ToJson() const;
};

// Sections: [corpus] root source; [backend] name base_url model api_key_env
// requests_per_second temperature; [summarize] chunk_words min_target_words
// variant jobs; [evaluate] recognizer embedder nli sidecar_url;
// [case_summarizer] date_boost entity_boost heading_boost heading_window
// extract_words; [families] <method id> = <family>; [output] dir.
RunConfig LoadConfig(const std::string &path);
RunConfig ParseConfig(const std::string &ini_text);

}  // namespace veridict::config

#endif  // VERIDICT_CONFIG_H_
