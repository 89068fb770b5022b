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

#include "httplib.h"
#include "veridict/errors.h"

namespace veridict {

UrlParts SplitUrl(const std::string &url) {
  size_t scheme = url.find("://");
  size_t host_begin = scheme == std::string::npos ? 0 : scheme + 3;
  size_t slash = url.find('/', host_begin);
  UrlParts parts;
  if (slash == std::string::npos) {
    parts.origin = url;
  } else {
    parts.origin = url.substr(0, slash);
    parts.path_prefix = url.substr(slash);
    while (!parts.path_prefix.empty() && parts.path_prefix.back() == '/') {
      parts.path_prefix.pop_back();
    }
  }
  return parts;
}

SidecarClient::SidecarClient(std::string base_url, std::chrono::seconds timeout)
    : base_url_(std::move(base_url)), timeout_(timeout) {}

nlohmann::json SidecarClient::Post(const std::string &path,
                                   const nlohmann::json &body) const {
  UrlParts url = SplitUrl(base_url_);
  httplib::Client client(url.origin);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  auto res = client.Post(url.path_prefix + path, body.dump(), "application/json");
  if (!res) {
    throw BackendUnavailable("sidecar " + base_url_ + path + " unreachable: " +
                             httplib::to_string(res.error()));
  }
  if (res->status >= 500) {
    throw BackendUnavailable("sidecar " + path + " returned HTTP " +
                             std::to_string(res->status));
  }
  if (res->status != 200) {
    throw BackendProtocolError("sidecar " + path + " rejected request: HTTP " +
                               std::to_string(res->status) + " " + res->body);
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception &e) {
    throw BackendProtocolError("sidecar " + path + " returned invalid JSON: " +
                               e.what());
  }
  // Enveloped responses carry the endpoint body under "payload".
  if (j.is_object() && j.contains("payload") && j["payload"].is_object()) {
    if (!j.contains("model_id") || !j["model_id"].is_string() ||
        j["model_id"].get<std::string>().empty()) {
      throw BackendProtocolError("sidecar " + path + " response lacks a model_id");
    }
    return j["payload"];
  }
  return j;
}

}  // namespace veridict
