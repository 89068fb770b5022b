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

#include "veridict/embedding.h"

#include <unicode/unistr.h>

#include <cmath>

#include "veridict/errors.h"
#include "veridict/textproc.h"

namespace veridict::embedding {

double Cosine(const Vector &a, const Vector &b) {
  if (a.size() != b.size()) throw InvalidArgument("cosine of mismatched dimensions");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

NgramEmbedder::NgramEmbedder(size_t min_n, size_t max_n, size_t dim)
    : min_n_(min_n), max_n_(max_n), dim_(dim) {
  if (min_n_ == 0 || max_n_ < min_n_ || dim_ == 0) {
    throw InvalidArgument("invalid n-gram embedder configuration");
  }
}

std::string NgramEmbedder::Id() const {
  return "ngram-" + std::to_string(min_n_) + "-" + std::to_string(max_n_) + "-" +
         std::to_string(dim_);
}

std::vector<Vector> NgramEmbedder::Embed(const std::vector<std::string> &texts) const {
  std::vector<Vector> out;
  out.reserve(texts.size());
  for (const std::string &t : texts) {
    std::string folded = "#" + text::FoldCase(t) + "#";
    icu::UnicodeString u = icu::UnicodeString::fromUTF8(folded);
    std::vector<UChar32> cps;
    for (int32_t i = 0; i < u.length(); i = u.moveIndex32(i, 1)) {
      cps.push_back(u.char32At(i));
    }
    Vector v(dim_, 0.0);
    for (size_t n = min_n_; n <= max_n_; ++n) {
      for (size_t i = 0; i + n <= cps.size(); ++i) {
        // FNV-1a over the code points of the n-gram.
        uint64_t h = 14695981039346656037ull;
        for (size_t k = i; k < i + n; ++k) {
          h ^= static_cast<uint64_t>(cps[k]);
          h *= 1099511628211ull;
        }
        h ^= n;
        h *= 1099511628211ull;
        v[h % dim_] += 1.0;
      }
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    if (norm > 0.0) {
      norm = std::sqrt(norm);
      for (double &x : v) x /= norm;
    }
    out.push_back(std::move(v));
  }
  return out;
}

SidecarEmbedder::SidecarEmbedder(std::shared_ptr<const SidecarClient> client)
    : client_(std::move(client)) {}

std::vector<Vector> SidecarEmbedder::Embed(const std::vector<std::string> &texts) const {
  std::vector<std::string> missing;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto &t : texts) {
      if (!cache_.count(t)) missing.push_back(t);
    }
  }
  for (size_t b = 0; b < missing.size(); b += kMaxBatch) {
    size_t e = std::min(missing.size(), b + kMaxBatch);
    std::vector<std::string> batch(missing.begin() + b, missing.begin() + e);
    nlohmann::json resp = client_->Post("/embed", {{"texts", batch}});
    std::vector<Vector> vectors;
    try {
      vectors = resp.at("vectors").get<std::vector<Vector>>();
    } catch (const nlohmann::json::exception &ex) {
      throw BackendProtocolError(std::string("malformed /embed response: ") + ex.what());
    }
    if (vectors.size() != batch.size()) {
      throw BackendProtocolError("/embed returned a different number of vectors");
    }
    std::lock_guard<std::mutex> lock(mu_);
    for (size_t i = 0; i < batch.size(); ++i) cache_[batch[i]] = std::move(vectors[i]);
  }
  std::vector<Vector> out;
  out.reserve(texts.size());
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto &t : texts) out.push_back(cache_.at(t));
  return out;
}

}  // namespace veridict::embedding
