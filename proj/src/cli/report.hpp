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

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace partex::cli {

using Json = nlohmann::ordered_json;

// A command's output. The body is a pure function of the arguments; wall
// time and version live in a separate header so bodies compare byte for
// byte across runs.
struct Report {
  std::string command;
  std::vector<std::string> argv;
  std::uint64_t seed = 1;
  Json parameters = Json::object();
  Json results = Json::object();
  std::vector<std::string> text;
  double wall_seconds = 0;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  Json body_json() const;
  Json to_json() const;
  /// Human-readable form: a '#' header line followed by the text body.
  std::string to_text() const;
  /// Stamps the wall time, then writes JSON or text.
  void emit(std::ostream& out, bool json);
};

/// Left-aligned fixed-width table.
std::vector<std::string> format_table(const std::vector<std::string>& header,
                                      const std::vector<std::vector<std::string>>& rows);

}  // namespace partex::cli
