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

#include "veridict/nli.h"

#include <cmath>

#include "veridict/errors.h"

namespace veridict::nli {

namespace {

std::string_view Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

NliScores VerbatimMockNli::Score(const std::string &premise,
                                 const std::string &hypothesis) const {
  NliScores s;
  if (Trim(premise) == Trim(hypothesis)) {
    s.entail = 1.0;
  } else {
    s.neutral = 1.0;
  }
  return s;
}

SidecarNli::SidecarNli(std::shared_ptr<const SidecarClient> client)
    : client_(std::move(client)) {}

NliScores SidecarNli::Score(const std::string &premise,
                            const std::string &hypothesis) const {
  auto key = std::make_pair(premise, hypothesis);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  nlohmann::json resp =
      client_->Post("/nli", {{"premise", premise}, {"hypothesis", hypothesis}});
  NliScores s;
  try {
    s.entail = resp.at("entail").get<double>();
    s.neutral = resp.at("neutral").get<double>();
    s.contradict = resp.at("contradict").get<double>();
  } catch (const nlohmann::json::exception &e) {
    throw BackendProtocolError(std::string("malformed /nli response: ") + e.what());
  }
  for (double p : {s.entail, s.neutral, s.contradict}) {
    if (!(p >= 0.0 && p <= 1.0)) throw BackendProtocolError("/nli probability out of range");
  }
  if (std::abs(s.entail + s.neutral + s.contradict - 1.0) > 1e-4) {
    throw BackendProtocolError("/nli probabilities do not sum to 1");
  }
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(std::move(key), s);
  return s;
}

}  // namespace veridict::nli
