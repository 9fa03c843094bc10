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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace partex {

/// Upper limit on the number of parts r.
inline constexpr int kMaxParts = 16;
/// Symbols are stored in a byte.
inline constexpr int kMaxPartSize = 255;
/// Default cap on the number of vectors in X_1 x ... x X_r.
inline constexpr std::uint64_t kDefaultVectorLimit = 1'000'000;

/// Subset of the coordinate set [r]. Bit (l-1) stands for part l.
class CoordSet {
 public:
  constexpr CoordSet() = default;
  constexpr explicit CoordSet(std::uint32_t bits) : bits_(bits) {}
  static CoordSet from_parts(std::initializer_list<int> parts);
  static CoordSet full(int r) { return CoordSet(r >= 32 ? ~0u : ((1u << r) - 1u)); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int part) const { return (bits_ >> (part - 1)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  void insert(int part) { bits_ |= 1u << (part - 1); }
  void erase(int part) { bits_ &= ~(1u << (part - 1)); }
  constexpr bool is_subset_of(CoordSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr CoordSet operator&(CoordSet o) const { return CoordSet(bits_ & o.bits_); }
  constexpr CoordSet operator|(CoordSet o) const { return CoordSet(bits_ | o.bits_); }
  /// Parts in increasing order, 1-based.
  std::vector<int> parts() const;
  /// "{1,3}" style.
  std::string to_string() const;

  constexpr bool operator==(const CoordSet&) const = default;
  /// Orders by the sorted list of parts, lexicographically.
  std::strong_ordering operator<=>(const CoordSet& other) const;

 private:
  std::uint32_t bits_ = 0;
};

/// The ambient product space X_1 x ... x X_r. Sizes are kept in the order
/// given; nothing here sorts them.
class PartSpec {
 public:
  explicit PartSpec(std::vector<int> sizes, std::uint64_t vector_limit = kDefaultVectorLimit);
  static PartSpec uniform(int r, int n, std::uint64_t vector_limit = kDefaultVectorLimit);

  int r() const { return static_cast<int>(sizes_.size()); }
  /// |X_part|, part is 1-based.
  int size(int part) const { return sizes_[static_cast<std::size_t>(part - 1)]; }
  std::span<const int> sizes() const { return sizes_; }
  std::uint64_t vector_count() const { return vector_count_; }
  std::uint64_t vector_limit() const { return vector_limit_; }
  bool is_uniform() const;
  int min_size() const;
  /// Total number of vertices n_1 + ... + n_r.
  int vertex_count() const;
  std::string to_string() const;

  bool operator==(const PartSpec& other) const { return sizes_ == other.sizes_; }

 private:
  std::vector<int> sizes_;
  std::uint64_t vector_count_ = 0;
  std::uint64_t vector_limit_ = kDefaultVectorLimit;
};

/// A vector (a_1, ..., a_r) with 1-based symbols.
class Edge {
 public:
  Edge() = default;
  Edge(std::initializer_list<int> coords);
  explicit Edge(std::span<const int> coords);

  int r() const { return r_; }
  /// a_part, both 1-based.
  int coord(int part) const { return coords_[static_cast<std::size_t>(part - 1)]; }
  void set_coord(int part, int symbol) {
    coords_[static_cast<std::size_t>(part - 1)] = static_cast<std::uint8_t>(symbol);
  }
  std::span<const std::uint8_t> coords() const {
    return {coords_.data(), static_cast<std::size_t>(r_)};
  }
  std::vector<int> to_vector() const;
  std::string to_string() const;

  bool operator==(const Edge& other) const;
  /// Lexicographic by coordinates; this is the canonical order.
  std::strong_ordering operator<=>(const Edge& other) const;

 private:
  std::array<std::uint8_t, kMaxParts> coords_{};
  std::uint8_t r_ = 0;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept;
};

/// Ordering token for canonical iteration; compares like the edge itself.
using CanonicalKey = std::span<const std::uint8_t>;
CanonicalKey canonical_sort_key(const Edge& e);
/// Three-way comparison in canonical (lexicographic) order.
std::strong_ordering compare_canonical(const Edge& a, const Edge& b);

/// A vertex of X_1 u ... u X_r: symbol `symbol` of part `part`, both 1-based.
struct Vertex {
  int part = 1;
  int symbol = 1;
  auto operator<=>(const Vertex&) const = default;
  std::string to_string() const;
};

/// Throws InvalidArgument unless `e` lies in the product space of `spec`.
/// `index` is only used in the message (-1 to omit).
void validate_edge(const PartSpec& spec, const Edge& e, long index = -1);
/// Throws InvalidArgument unless `v` is a vertex of `spec`.
void validate_vertex(const PartSpec& spec, const Vertex& v);

/// Position of `e` in the canonical enumeration of X_1 x ... x X_r.
std::uint64_t edge_rank(const PartSpec& spec, const Edge& e);
Edge edge_unrank(const PartSpec& spec, std::uint64_t rank);

}  // namespace partex
