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

#include "partex/part_spec.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "partex/error.hpp"

namespace partex {

CoordSet CoordSet::from_parts(std::initializer_list<int> parts) {
  CoordSet s;
  for (int p : parts) {
    if (p < 1 || p > 32) throw InvalidArgument("coordinate " + std::to_string(p) + " out of range");
    s.insert(p);
  }
  return s;
}

int CoordSet::size() const { return std::popcount(bits_); }

std::vector<int> CoordSet::parts() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string CoordSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int p : parts()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

std::strong_ordering CoordSet::operator<=>(const CoordSet& other) const {
  const auto a = parts();
  const auto b = other.parts();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

PartSpec::PartSpec(std::vector<int> sizes, std::uint64_t vector_limit)
    : sizes_(std::move(sizes)), vector_limit_(vector_limit) {
  if (sizes_.size() < 2) throw InvalidArgument("need at least 2 parts, got " + std::to_string(sizes_.size()));
  if (sizes_.size() > static_cast<std::size_t>(kMaxParts)) {
    throw InvalidArgument("at most " + std::to_string(kMaxParts) + " parts are supported");
  }
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    const int n = sizes_[i];
    if (n < 2 || n > kMaxPartSize) {
      throw InvalidArgument("part " + std::to_string(i + 1) + " has size " + std::to_string(n) +
                            "; sizes must lie in [2, " + std::to_string(kMaxPartSize) + "]");
    }
    if (product > vector_limit_ / static_cast<std::uint64_t>(n)) {
      throw BudgetExceeded("product of part sizes exceeds the vector limit " +
                           std::to_string(vector_limit_));
    }
    product *= static_cast<std::uint64_t>(n);
  }
  vector_count_ = product;
}

PartSpec PartSpec::uniform(int r, int n, std::uint64_t vector_limit) {
  if (r < 2) throw InvalidArgument("need at least 2 parts, got " + std::to_string(r));
  if (r > kMaxParts) throw InvalidArgument("at most " + std::to_string(kMaxParts) + " parts are supported");
  return PartSpec(std::vector<int>(static_cast<std::size_t>(r), n), vector_limit);
}

bool PartSpec::is_uniform() const {
  return std::all_of(sizes_.begin(), sizes_.end(), [&](int n) { return n == sizes_.front(); });
}

int PartSpec::min_size() const { return *std::min_element(sizes_.begin(), sizes_.end()); }

int PartSpec::vertex_count() const {
  int total = 0;
  for (int n : sizes_) total += n;
  return total;
}

std::string PartSpec::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < sizes_.size(); ++i) os << (i ? "," : "") << sizes_[i];
  os << ')';
  return os.str();
}

Edge::Edge(std::initializer_list<int> coords) : Edge(std::span<const int>(coords.begin(), coords.size())) {}

Edge::Edge(std::span<const int> coords) {
  if (coords.size() > static_cast<std::size_t>(kMaxParts)) {
    throw InvalidArgument("edge has more than " + std::to_string(kMaxParts) + " coordinates");
  }
  r_ = static_cast<std::uint8_t>(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 1 || coords[i] > kMaxPartSize) {
      throw InvalidArgument("coordinate " + std::to_string(i + 1) + " = " + std::to_string(coords[i]) +
                            " is not a valid symbol");
    }
    coords_[i] = static_cast<std::uint8_t>(coords[i]);
  }
}

std::vector<int> Edge::to_vector() const {
  return std::vector<int>(coords_.begin(), coords_.begin() + r_);
}

std::string Edge::to_string() const {
  std::string out = "(";
  for (int i = 0; i < r_; ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[static_cast<std::size_t>(i)]);
  }
  return out + ")";
}

bool Edge::operator==(const Edge& other) const {
  return r_ == other.r_ && std::equal(coords_.begin(), coords_.begin() + r_, other.coords_.begin());
}

std::strong_ordering Edge::operator<=>(const Edge& other) const {
  const auto a = coords();
  const auto b = other.coords();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t EdgeHash::operator()(const Edge& e) const noexcept {
  // FNV-1a over the used coordinates.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t c : e.coords()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

CanonicalKey canonical_sort_key(const Edge& e) { return e.coords(); }

std::strong_ordering compare_canonical(const Edge& a, const Edge& b) { return a <=> b; }

std::string Vertex::to_string() const {
  return std::to_string(part) + ":" + std::to_string(symbol);
}

void validate_edge(const PartSpec& spec, const Edge& e, long index) {
  const std::string where = index >= 0 ? "edge " + std::to_string(index) + ": " : "";
  if (e.r() != spec.r()) {
    throw InvalidArgument(where + "wrong arity " + std::to_string(e.r()) + ", expected " +
                          std::to_string(spec.r()));
  }
  for (int part = 1; part <= spec.r(); ++part) {
    if (e.coord(part) > spec.size(part)) {
      throw InvalidArgument(where + "coordinate " + std::to_string(e.coord(part)) + " out of range in part " +
                            std::to_string(part) + " (size " + std::to_string(spec.size(part)) + ")");
    }
  }
}

void validate_vertex(const PartSpec& spec, const Vertex& v) {
  if (v.part < 1 || v.part > spec.r() || v.symbol < 1 || v.symbol > spec.size(v.part)) {
    throw InvalidArgument("vertex " + v.to_string() + " is outside " + spec.to_string());
  }
}

std::uint64_t edge_rank(const PartSpec& spec, const Edge& e) {
  std::uint64_t rank = 0;
  for (int part = 1; part <= spec.r(); ++part) {
    rank = rank * static_cast<std::uint64_t>(spec.size(part)) + static_cast<std::uint64_t>(e.coord(part) - 1);
  }
  return rank;
}

Edge edge_unrank(const PartSpec& spec, std::uint64_t rank) {
  std::array<int, kMaxParts> coords{};
  for (int part = spec.r(); part >= 1; --part) {
    const auto n = static_cast<std::uint64_t>(spec.size(part));
    coords[static_cast<std::size_t>(part - 1)] = static_cast<int>(rank % n) + 1;
    rank /= n;
  }
  return Edge(std::span<const int>(coords.data(), static_cast<std::size_t>(spec.r())));
}

}  // namespace partex
