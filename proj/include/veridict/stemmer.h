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

#ifndef VERIDICT_STEMMER_H_
#define VERIDICT_STEMMER_H_

#include <string>
#include <string_view>

namespace veridict::text {

// Porter (1980) suffix-stripping stemmer for lowercase English words.
// Words with characters outside [a-z] are returned unchanged; words of
// length <= 2 are not stemmed.
std::string PorterStem(std::string_view word);

}  // namespace veridict::text

#endif  // VERIDICT_STEMMER_H_
