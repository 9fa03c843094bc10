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

#include "cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "partex/cli.hpp"

namespace partex::cli {

Json Report::body_json() const {
  Json body;
  body["command"] = command;
  body["argv"] = argv;
  body["seed"] = seed;
  body["parameters"] = parameters;
  body["results"] = results;
  return body;
}

Json Report::to_json() const {
  Json j;
  j["schema"] = kReportSchema;
  Json header;
  header["version"] = kVersion;
  header["wall_seconds"] = wall_seconds;
  j["header"] = header;
  j["body"] = body_json();
  return j;
}

std::string Report::to_text() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", wall_seconds);
  std::string out = std::string("# partex ") + kVersion + " " + command + " wall=" + buf + "s\n";
  for (const auto& line : text) out += line + "\n";
  return out;
}

void Report::emit(std::ostream& out, bool json) {
  wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (json) out << to_json().dump(2) << "\n";
  else out << to_text();
}

std::vector<std::string> format_table(const std::vector<std::string>& header,
                                      const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      s += cells[c];
      if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  std::vector<std::string> out;
  out.push_back(line(header));
  for (const auto& row : rows) out.push_back(line(row));
  return out;
}

}  // namespace partex::cli
