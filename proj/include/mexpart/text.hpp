/*
 * Copyright 2026 The mexpart Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Line grammar shared by the CLI and the golden tables.
//
//   partition      "8 7 3 2 1 1"        parts weakly decreasing
//   overpartition  "~6 ~4 ~3 3 3 ~2 ~1" "~" marks an overlined part; sizes
//                                       descending, overlined copy first
//   colored        "5_2 1_1"            "_1"/"_2" suffix gives the color
//   empty object   "-"
//
// Parsers accept the tokens in any order and normalize. A colored token with
// no suffix takes color 1.

#include <string>
#include <string_view>

#include "mexpart/families.hpp"

namespace mexpart {

std::string to_text(const Partition& p);
std::string to_text(const Overpartition& op);
std::string to_text(const ColoredPartition& c);
std::string to_text(const FamilyObject& obj);

/// One-line JSON record: {"parts":[..]}, {"overlined":[..],"plain":[..]},
/// or {"parts":[{"size":5,"color":2},..]}.
std::string to_json_line(const FamilyObject& obj);

// All parsers throw ParseError on malformed text and DomainError on text that
// is well formed but violates the type invariants (repeated overlined part,
// even colored part).
Partition parse_partition(std::string_view text);
Overpartition parse_overpartition(std::string_view text);
ColoredPartition parse_colored(std::string_view text);

}  // namespace mexpart
