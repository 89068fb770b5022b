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

#ifndef VERIDICT_CSV_H_
#define VERIDICT_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace veridict::csv {

using Row = std::vector<std::string>;

// RFC 4180 parsing: quoted fields, doubled quotes, CRLF or LF line ends.
// Blank lines are skipped.
std::vector<Row> Parse(std::string_view text);

// Quotes a field when it contains a comma, quote or newline.
std::string Escape(std::string_view field);

std::string FormatRow(const Row &row);

}  // namespace veridict::csv

#endif  // VERIDICT_CSV_H_
