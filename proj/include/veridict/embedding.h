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

#ifndef VERIDICT_EMBEDDING_H_
#define VERIDICT_EMBEDDING_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "veridict/sidecar_client.h"

namespace veridict::embedding {

using Vector = std::vector<double>;

class Embedder {
 public:
  virtual ~Embedder() = default;
  // One vector per input text, all of the same dimension.
  virtual std::vector<Vector> Embed(const std::vector<std::string> &texts) const = 0;
  virtual std::string Id() const = 0;
};

// Cosine similarity; 0 when either vector has zero norm.
double Cosine(const Vector &a, const Vector &b);

// Hashed bag of character n-grams of the case-folded text, padded with '#'
// boundary markers, L2-normalized. Deterministic and model-free.
class NgramEmbedder : public Embedder {
 public:
  NgramEmbedder(size_t min_n = 2, size_t max_n = 3, size_t dim = 4096);
  std::vector<Vector> Embed(const std::vector<std::string> &texts) const override;
  std::string Id() const override;

 private:
  size_t min_n_;
  size_t max_n_;
  size_t dim_;
};

// Vectors from the sidecar /embed endpoint, batched (<= 256 texts per call)
// and cached per text.
class SidecarEmbedder : public Embedder {
 public:
  static constexpr size_t kMaxBatch = 256;

  explicit SidecarEmbedder(std::shared_ptr<const SidecarClient> client);
  std::vector<Vector> Embed(const std::vector<std::string> &texts) const override;
  std::string Id() const override { return "sidecar"; }

 private:
  std::shared_ptr<const SidecarClient> client_;
  mutable std::mutex mu_;
  mutable std::map<std::string, Vector> cache_;
};

}  // namespace veridict::embedding

#endif  // VERIDICT_EMBEDDING_H_
