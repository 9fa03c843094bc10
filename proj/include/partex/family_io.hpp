// Copyright 2026 The partex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "partex/family.hpp"

namespace partex {

// Canonical family text format:
//
//   PARTITE <r>
//   SIZES <n1> ... <nr>
//   <a1> ... <ar>        one edge per line, canonical order
//
// LF line endings, single spaces, no trailing whitespace. Lines starting with
// '#' are skipped when reading and never written.

std::string format_family(const Family& f);
void write_family(std::ostream& out, const Family& f);

/// Parses the text format. Edges may appear in any order and may repeat.
/// Throws ParseError with a 1-based line number.
Family parse_family(std::string_view text, std::uint64_t vector_limit = kDefaultVectorLimit);
Family read_family(std::istream& in, std::uint64_t vector_limit = kDefaultVectorLimit);
Family load_family(const std::string& path, std::uint64_t vector_limit = kDefaultVectorLimit);
void save_family(const std::string& path, const Family& f);

}  // namespace partex
