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

#include "partex/family_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "partex/error.hpp"

namespace partex {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string format_family(const Family& f) {
  std::string out = "PARTITE " + std::to_string(f.spec().r()) + "\nSIZES";
  for (int n : f.spec().sizes()) out += " " + std::to_string(n);
  out += '\n';
  for (const Edge& e : f) {
    bool first = true;
    for (std::uint8_t c : e.coords()) {
      if (!first) out += ' ';
      out += std::to_string(c);
      first = false;
    }
    out += '\n';
  }
  return out;
}

void write_family(std::ostream& out, const Family& f) { out << format_family(f); }

Family parse_family(std::string_view text, std::uint64_t vector_limit) {
  int line_no = 0;
  int r = -1;
  std::optional<PartSpec> spec;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (r < 0) {
      if (fields.size() != 2 || fields[0] != "PARTITE") throw ParseError(line_no, "expected 'PARTITE <r>'");
      r = parse_int(fields[1], line_no);
      if (r < 2 || r > kMaxParts) throw ParseError(line_no, "part count " + std::to_string(r) + " out of range");
      continue;
    }
    if (!spec) {
      if (fields.empty() || fields[0] != "SIZES") throw ParseError(line_no, "expected 'SIZES <n1> ... <nr>'");
      if (fields.size() != static_cast<std::size_t>(r) + 1) {
        throw ParseError(line_no, "SIZES lists " + std::to_string(fields.size() - 1) + " sizes, expected " +
                                      std::to_string(r));
      }
      std::vector<int> sizes;
      for (std::size_t i = 1; i < fields.size(); ++i) sizes.push_back(parse_int(fields[i], line_no));
      try {
        spec.emplace(std::move(sizes), vector_limit);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    if (fields.size() != static_cast<std::size_t>(r)) {
      throw ParseError(line_no, "edge has " + std::to_string(fields.size()) + " coordinates, expected " +
                                    std::to_string(r));
    }
    std::vector<int> coords;
    for (auto tok : fields) coords.push_back(parse_int(tok, line_no));
    try {
      Edge e(coords);
      validate_edge(*spec, e);
      edges.push_back(e);
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (r < 0) throw ParseError(line_no + 1, "missing 'PARTITE' header");
  if (!spec) throw ParseError(line_no + 1, "missing 'SIZES' header");
  return make_family(*spec, std::move(edges));
}

Family read_family(std::istream& in, std::uint64_t vector_limit) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str(), vector_limit);
}

Family load_family(const std::string& path, std::uint64_t vector_limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "' for reading");
  return read_family(in, vector_limit);
}

void save_family(const std::string& path, const Family& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
  write_family(out, f);
}

}  // namespace partex
