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

#ifndef VERIDICT_CLI_H_
#define VERIDICT_CLI_H_

#include <iosfwd>

namespace veridict::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Subcommands: ingest, stats, extract, summarize, evaluate, audit, correct,
// report. Tables and messages go to `out`, diagnostics to `err`. Every run
// that writes a file also writes <file>.manifest.json with the effective
// configuration and SHA-256 hashes of inputs and outputs.
int CommandSuite(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace veridict::cli

#endif  // VERIDICT_CLI_H_
