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
#include <vector>

#include "partex/bitset.hpp"

namespace partex::detail {

// Exact matching and transversal search over a finite hypergraph whose
// members are nonempty vertex lists over [0, vertex_count). Member order and
// vertex ids define the orders in which witnesses are lexicographically least.
//
// When `vertex_part` is given and every member meets every part exactly once
// (an r-partite r-graph), the number of live vertices in the scarcest part
// is used as an extra matching upper bound.
class Hypergraph {
 public:
  Hypergraph(int vertex_count, std::vector<std::vector<int>> members, std::vector<int> vertex_part = {});

  std::size_t member_count() const { return members_.size(); }
  int vertex_count() const { return vertex_count_; }
  const std::vector<int>& member(std::size_t i) const { return members_[i]; }
  const Bitset& incidence(int v) const { return incidence_[static_cast<std::size_t>(v)]; }
  Bitset all_members() const { return Bitset::full(members_.size()); }
  /// Members of `within` sharing no vertex with member i.
  Bitset disjoint_from(std::size_t i, const Bitset& within) const;

  /// Size of a maximum matching among the members of `within`.
  int matching_number(const Bitset& within) const;
  /// True iff `within` contains k pairwise disjoint members.
  bool has_matching(const Bitset& within, int k) const;
  /// Lexicographically least maximum matching (member indices, increasing).
  std::vector<std::size_t> lexleast_maximum_matching() const;

  /// Minimum number of vertices meeting every member of `within`.
  int transversal_number(const Bitset& within) const;
  /// True iff at most k vertices meet every member of `within`.
  bool has_transversal(const Bitset& within, int k) const;
  /// Lexicographically least minimum transversal (vertex ids, increasing).
  std::vector<int> lexleast_minimum_transversal() const;

 private:
  int matching_bound(const Bitset& live) const;
  int greedy_matching_size(Bitset live) const;
  int greedy_transversal_size(Bitset live) const;
  void matching_search(const Bitset& live, int current, int& best, int target) const;
  bool transversal_search(const Bitset& uncovered, int budget) const;
  bool lexleast_transversal_search(const Bitset& uncovered, int last, int budget,
                                   std::vector<int>& chosen) const;

  int vertex_count_;
  std::vector<std::vector<int>> members_;
  std::vector<int> vertex_part_;
  int part_count_ = 0;
  bool full_partite_ = false;
  std::vector<Bitset> incidence_;
};

}  // namespace partex::detail
