// Copyright 2026 The citeflow Authors.
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace citeflow::text {

std::string_view trim(std::string_view s) noexcept;

// Lower-cases ASCII letters; bytes >= 0x80 pass through untouched.
std::string fold_case(std::string_view s);

// Trims, collapses internal whitespace runs to one space and folds case.
std::string normalize_keyword(std::string_view s);

// Splits on `sep`, trims every piece and drops empty pieces.
std::vector<std::string> split_trimmed(std::string_view s, char sep);

bool iequals(std::string_view a, std::string_view b) noexcept;

// Shortest representation that parses back to the identical double.
std::string format_double(double v);

}  // namespace citeflow::text
