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
#include <unordered_set>
#include <vector>

#include "partex/part_spec.hpp"

namespace partex {

/// A set of distinct edges over one PartSpec. Immutable once built; kept
/// both as a canonically sorted list and as a hash set for membership.
class Family {
 public:
  explicit Family(PartSpec spec);

  const PartSpec& spec() const { return spec_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  bool contains(const Edge& e) const { return index_.contains(e); }
  /// True iff every edge of this family is in `other`.
  bool is_subset_of(const Family& other) const;

  bool operator==(const Family& other) const;

 private:
  friend Family make_family(const PartSpec& spec, std::vector<Edge> edges);

  PartSpec spec_;
  std::vector<Edge> edges_;
  std::unordered_set<Edge, EdgeHash> index_;
};

/// Validates, deduplicates and sorts `edges`. Throws InvalidArgument naming
/// the offending edge index and part.
Family make_family(const PartSpec& spec, std::vector<Edge> edges);

/// The complete r-partite r-graph X_1 x ... x X_r.
Family complete_family(const PartSpec& spec);

/// Edges of `f` satisfying `pred`, as a family over the same spec.
template <class Pred>
Family filter_family(const Family& f, Pred pred) {
  std::vector<Edge> kept;
  for (const Edge& e : f) {
    if (pred(e)) kept.push_back(e);
  }
  return make_family(f.spec(), std::move(kept));
}

}  // namespace partex
