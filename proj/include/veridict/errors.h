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

#ifndef VERIDICT_ERRORS_H_
#define VERIDICT_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace veridict {

// Base class for all library errors. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated an operation precondition (empty corpus, bad K, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(const std::string &path, const std::string &what)
      : Error(what + ": " + path), path_(path) {}
  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

// A document file without its summary (or the reverse) in a corpus layout.
class MissingPairError : public Error {
 public:
  explicit MissingPairError(std::string id)
      : Error("missing document/summary pair for id '" + id + "'"),
        id_(std::move(id)) {}
  const std::string &id() const { return id_; }

 private:
  std::string id_;
};

// A remote service (LLM, sidecar) could not be reached or answered with a
// server-side failure.
class BackendUnavailable : public Error {
 public:
  using Error::Error;
};

// The backend answered, but the answer violates the contract (empty text,
// malformed JSON, probabilities out of range).
class BackendProtocolError : public Error {
 public:
  using Error::Error;
};

// Some chunks of a document could not be summarized after all retries.
class PartialFailure : public Error {
 public:
  PartialFailure(const std::string &what, std::vector<size_t> failed_chunks)
      : Error(what), failed_chunks_(std::move(failed_chunks)) {}
  const std::vector<size_t> &failed_chunks() const { return failed_chunks_; }

 private:
  std::vector<size_t> failed_chunks_;
};

}  // namespace veridict

#endif  // VERIDICT_ERRORS_H_
