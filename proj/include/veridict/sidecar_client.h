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

#ifndef VERIDICT_SIDECAR_CLIENT_H_
#define VERIDICT_SIDECAR_CLIENT_H_

#include <chrono>
#include <string>

#include "json.hpp"

namespace veridict {

// Minimal JSON-over-HTTP client for the model sidecar (/ner, /embed, /nli).
// Thread-safe: every call opens its own connection.
class SidecarClient {
 public:
  explicit SidecarClient(std::string base_url,
                         std::chrono::seconds timeout = std::chrono::seconds(60));

  // POSTs body to base_url + path and returns the parsed response. Throws
  // BackendUnavailable on connection failure or 5xx, BackendProtocolError
  // on 4xx or a non-JSON body. An enveloped response yields its payload.
  nlohmann::json Post(const std::string &path, const nlohmann::json &body) const;

  const std::string &base_url() const { return base_url_; }

 private:
  std::string base_url_;
  std::chrono::seconds timeout_;
};

// Splits "http://host:port/prefix" into the scheme+authority part accepted
// by httplib::Client and the path prefix.
struct UrlParts {
  std::string origin;
  std::string path_prefix;
};
UrlParts SplitUrl(const std::string &url);

}  // namespace veridict

#endif  // VERIDICT_SIDECAR_CLIENT_H_
