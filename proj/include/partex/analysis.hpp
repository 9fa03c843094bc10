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
#include <span>
#include <vector>

#include "partex/family.hpp"
#include "partex/set_family.hpp"

namespace partex {

/// Pairwise disjoint edges (A[l] != B[l] for every l), canonical order.
struct MatchingWitness {
  std::vector<Edge> edges;
};

/// Vertices meeting every edge of the analysed family, in (part, symbol) order.
struct TransversalWitness {
  std::vector<Vertex> vertices;
};

struct MatchingResult {
  int size = 0;
  MatchingWitness witness;
};

struct TransversalResult {
  int size = 0;
  TransversalWitness witness;
};

struct AnalysisReport {
  int nu = 0;
  int tau = 0;
  /// r when the family has at most one edge.
  int min_pairwise_intersection = 0;
  /// Empty for the empty family, where the fixed-coordinate set is undefined.
  std::optional<CoordSet> fixed_coords;
  MatchingWitness nu_witness;
  TransversalWitness tau_witness;
};

/// |{l : a[l] = b[l]}|. Throws InvalidArgument if the arities differ.
int intersection_size(const Edge& a, const Edge& b);

/// Minimum of intersection_size over unordered pairs; r if |f| <= 1.
int min_pairwise_intersection(const Family& f);

/// Every unordered pair meets in at least t coordinates. Requires 0 <= t <= r.
bool is_t_intersecting(const Family& f, int t);

/// Exact nu(F) with the lexicographically least maximum matching.
MatchingResult matching_number(const Family& f);

/// Exact tau(F) with the lexicographically least minimum transversal.
TransversalResult transversal_number(const Family& f);

/// Coordinates on which every edge agrees; nullopt for the empty family.
std::optional<CoordSet> fixed_coordinates(const Family& f);

/// nu(F) <= s < tau(F). Requires s >= 1.
bool is_nontrivial_matching_family(const Family& f, int s);

/// t-intersecting with |fixed coordinates| < t. Requires 1 <= t < r; the
/// empty family is never non-trivial.
bool is_nontrivial_intersecting_family(const Family& f, int t);

/// Coordinates holding the distinguished symbol 1.
CoordSet projection(const Edge& e);

/// Distinct projections of the edges of `f`, over ground set [r].
SetFamily projection_family(const Family& f);

/// All invariants at once.
AnalysisReport analyze(const Family& f);

bool is_matching(std::span<const Edge> edges);
bool is_transversal(const Family& f, std::span<const Vertex> vertices);

}  // namespace partex
