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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partex/family.hpp"
#include "partex/formulas.hpp"
#include "partex/set_family.hpp"
#include "partex/symmetry.hpp"

namespace partex {

enum class SearchMode {
  /// Maximise |F| subject to nu(F) <= s < tau(F).
  kMatching,
  /// Maximise |F| subject to F t-intersecting with fewer than t fixed coordinates.
  kIntersecting,
};

struct SearchProblem {
  PartSpec spec;
  SearchMode mode;
  /// s in matching mode, t in intersecting mode.
  int param;

  static SearchProblem matching(PartSpec spec, int s) { return {std::move(spec), SearchMode::kMatching, s}; }
  static SearchProblem intersecting(PartSpec spec, int t) {
    return {std::move(spec), SearchMode::kIntersecting, t};
  }
  /// e.g. "matching s=1 (3,2,2)".
  std::string to_string() const;
};

/// Throws InvalidArgument unless 1 <= s < min size (matching) or
/// 1 <= t <= r-2 (intersecting).
void validate_problem(const SearchProblem& p);

/// Feasibility (nu <= s, or t-intersecting) of `f` for `p`.
bool is_feasible(const Family& f, const SearchProblem& p);
/// The non-triviality predicate of `p`'s mode.
bool is_nontrivial(const Family& f, const SearchProblem& p);

/// Default node budget: 1e8, or the value of PARTEX_NODE_LIMIT.
std::uint64_t default_node_limit();

inline constexpr std::uint64_t kDefaultSearchVectorCap = 4096;

struct SearchOptions {
  std::uint64_t node_limit = default_node_limit();
  /// Fix the first two members to orbit representatives.
  bool symmetry = true;
  int threads = 1;
  /// Start from the matching construction (E or W_{r,t}/K_{r,t}) when it
  /// is defined for the problem.
  bool seed_with_construction = false;
  std::uint64_t canonical_cap = kDefaultCanonicalCap;
  std::uint64_t max_vectors = kDefaultSearchVectorCap;
};

struct FormulaMatch {
  std::string name;
  BigInt value;
  bool equal = false;
};

struct SearchResult {
  explicit SearchResult(Family w) : witness(std::move(w)) {}

  long optimum = 0;
  /// Canonically relabelled optimal family; empty when optimum is 0.
  Family witness;
  std::uint64_t nodes_explored = 0;
  /// The search finished within budget, so `optimum` is proven.
  bool exhaustive = true;
  /// The witness relabelling scanned the whole automorphism group.
  bool witness_canonical_exact = true;
  std::optional<FormulaMatch> matched_formula;
  double seconds = 0;
};

/// The closed form stated for the problem's parameters, if there is one.
std::optional<FormulaValue> reference_formula(const SearchProblem& p);

/// Exact optimum by depth-first branch and bound.
SearchResult solve(const SearchProblem& p, const SearchOptions& options = {});

struct UniformResult {
  int r = 0;
  int t = 0;
  int optimum = 0;
  /// Every maximum family, as found (not relabelled).
  std::vector<SetFamily> maximum_families;
  /// Each maximum family is isomorphic to the star or the simplex.
  bool all_star_or_simplex = false;
  int star_count = 0;
  int simplex_count = 0;
};

/// Largest t-intersecting family of (t+1)-subsets of [r], by enumerating
/// maximum cliques. Requires 1 <= t <= r-2 and r <= 8.
UniformResult solve_uniform(int r, int t);

}  // namespace partex
