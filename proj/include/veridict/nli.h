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

#ifndef VERIDICT_NLI_H_
#define VERIDICT_NLI_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "veridict/sidecar_client.h"

namespace veridict::nli {

struct NliScores {
  double entail = 0.0;
  double neutral = 0.0;
  double contradict = 0.0;
};

class NliBackend {
 public:
  virtual ~NliBackend() = default;
  virtual NliScores Score(const std::string &premise,
                          const std::string &hypothesis) const = 0;
  virtual std::string Id() const = 0;
};

// entail = 1 iff the hypothesis equals the premise after trimming
// surrounding whitespace; neutral = 1 otherwise.
class VerbatimMockNli : public NliBackend {
 public:
  NliScores Score(const std::string &premise,
                  const std::string &hypothesis) const override;
  std::string Id() const override { return "verbatim-mock"; }
};

// Sidecar /nli endpoint, cached per (premise, hypothesis).
class SidecarNli : public NliBackend {
 public:
  explicit SidecarNli(std::shared_ptr<const SidecarClient> client);
  NliScores Score(const std::string &premise,
                  const std::string &hypothesis) const override;
  std::string Id() const override { return "sidecar"; }

 private:
  std::shared_ptr<const SidecarClient> client_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::string, std::string>, NliScores> cache_;
};

}  // namespace veridict::nli

#endif  // VERIDICT_NLI_H_
