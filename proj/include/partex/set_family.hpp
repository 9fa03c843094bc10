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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "partex/part_spec.hpp"

namespace partex {

/// A family of distinct subsets of [r], kept sorted by CoordSet order.
/// Holds projection families P(F), uniform families H and the templates
/// fed to `extend`.
class SetFamily {
 public:
  explicit SetFamily(int ground_size);
  SetFamily(int ground_size, std::vector<CoordSet> sets);
  /// Convenience: sets written as lists of 1-based elements.
  SetFamily(int ground_size, std::initializer_list<std::initializer_list<int>> sets);

  int ground_size() const { return ground_size_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  std::span<const CoordSet> sets() const { return sets_; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  bool contains(CoordSet s) const;
  void insert(CoordSet s);

  /// min |A n B| over unordered pairs of distinct members; ground_size if
  /// there are fewer than two members.
  int min_pairwise_intersection() const;
  bool is_t_intersecting(int t) const;
  /// Intersection of all members; the full ground set for an empty family.
  CoordSet common_elements() const;
  /// t-intersecting with fewer than t elements common to every member.
  bool is_nontrivial_t_intersecting(int t) const;
  bool is_uniform(int k) const;

  std::string to_string() const;
  bool operator==(const SetFamily&) const = default;

 private:
  int ground_size_;
  std::vector<CoordSet> sets_;
};

}  // namespace partex
