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

#include <optional>
#include <string>
#include <vector>

#include "partex/family.hpp"
#include "partex/formulas.hpp"

namespace partex {

/// A sorted, duplicate-free list of integer vertices.
using VertexSet = std::vector<int>;

/// Distinct nonempty vertex sets, kept in lexicographic order. Vertices are
/// arbitrary integers; `labels` optionally names them for output.
class GroundedSetFamily {
 public:
  GroundedSetFamily() = default;
  explicit GroundedSetFamily(std::vector<VertexSet> sets);

  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const std::vector<VertexSet>& sets() const { return sets_; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  bool contains(const VertexSet& s) const;
  /// Largest member size; 0 for the empty family.
  int rank() const;
  /// Union of all members, sorted.
  VertexSet ground() const;
  /// No member strictly contains another.
  bool is_antichain() const;

  std::string to_string() const;
  bool operator==(const GroundedSetFamily&) const = default;

 private:
  std::vector<VertexSet> sets_;
};

std::string format_vertex_set(const VertexSet& s);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool are_disjoint(const VertexSet& a, const VertexSet& b);

/// Replaces every superset of `c` by `c`. Throws InvalidArgument when `c`
/// is empty or not a proper subset of some member.
GroundedSetFamily shrink(const GroundedSetFamily& f, const VertexSet& c);

/// Maximum number of pairwise disjoint members.
int set_matching_number(const GroundedSetFamily& f);

struct ShrinkStep {
  VertexSet core;
  std::vector<VertexSet> replaced;
  int nu_before = 0;
  int nu_after = 0;
  bool accepted = false;
};

struct BaseFamily {
  GroundedSetFamily sets;
  /// Accepted and rejected shrink attempts in the order they were tried.
  std::vector<ShrinkStep> provenance;
  /// Number of members of each cardinality (index = cardinality).
  std::vector<int> size_distribution() const;
  /// One JSON object per line, one line per step.
  std::string provenance_json_lines() const;
};

/// Applies the accepted steps of `log` to `f` in order.
GroundedSetFamily replay_provenance(const GroundedSetFamily& f, const std::vector<ShrinkStep>& log);

/// Greedy fixpoint of matching-number-preserving shrinks. Members are
/// scanned in lexicographic order and their proper nonempty subsets by
/// decreasing size, then lexicographically; the first subset whose shrink
/// keeps the matching number is taken and the scan restarts. Subsets that
/// already contain a member are not tried. Members that contain another
/// member are dropped first (recorded as shrinks by that member).
BaseFamily compute_base(const GroundedSetFamily& f);

/// Checks the four defining conditions of a base of `original`: antichain,
/// every original member contains a base member, equal matching numbers,
/// and every shrink of the base increases its matching number.
bool is_base_of(const GroundedSetFamily& base, const GroundedSetFamily& original);

/// True iff shrinking by `c` keeps the matching number.
bool shrink_preserves_matching(const GroundedSetFamily& f, const VertexSet& c);

struct Sunflower {
  VertexSet core;
  std::vector<VertexSet> petals;
};

/// Core equals the intersection of the petals and the petals minus the core
/// are pairwise disjoint.
bool is_sunflower(const Sunflower& s);

/// A sunflower with exactly `petal_count` members of `f`, if one exists.
/// Requires petal_count >= 1.
std::optional<Sunflower> find_sunflower(const GroundedSetFamily& f, int petal_count);

struct ErdosRadoReport {
  int rank = 0;
  int petal_count = 0;
  BigInt family_size;
  BigInt bound;
  bool bound_exceeded = false;
  /// Set whenever one exists, found or not required by the bound.
  std::optional<Sunflower> sunflower;
};

ErdosRadoReport erdos_rado_check(const GroundedSetFamily& f, int petal_count);

/// Encodes vertex (part, symbol) as part * 256 + symbol.
int tagged_vertex_id(const Vertex& v);
Vertex tagged_vertex(int id);

/// Each edge as its set of tagged vertices.
GroundedSetFamily to_grounded(const Family& f);

struct PartiteBaseReport {
  BaseFamily base;
  int s = 0;
  int nu_base = 0;
  int tau_base = 0;
  bool has_large_sunflower = false;
  BigInt size_bound;
  int nu_family = 0;
  /// nu(B) = nu(F) <= s < tau(B), no (rs+1)-petal sunflower, |B| <= r!(rs)^r.
  bool lemma_holds() const;
};

/// Minimum number of vertices meeting every member.
int set_transversal_number(const GroundedSetFamily& f);

/// Base of the tagged-vertex form of `f`, with the checks listed on
/// PartiteBaseReport. Throws PreconditionViolated unless nu(f) <= s < tau(f).
PartiteBaseReport base_of_partite_family(const Family& f, int s);

}  // namespace partex
