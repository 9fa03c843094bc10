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

#include "partex/formulas.hpp"
#include "partex/search.hpp"

namespace partex {

enum class Verdict { kEqual, kSearchBelowFormula, kSearchAboveFormula, kInconclusive };
std::string to_string(Verdict v);

/// Whether a closed form is claimed for every size or only for large sizes.
enum class Regime { kAllN, kLargeN };
std::string to_string(Regime r);

struct TheoremInfo {
  std::string id;
  Regime regime;
  SearchMode mode;
  std::string formula_name;
  std::string summary;
};

/// m0_s1, m0_asym3, iota0_r_minus_2 (all sizes); m0_s, iota0_symmetric,
/// m0_unbalanced, m0_asym4 (large sizes only).
const std::vector<TheoremInfo>& theorem_catalog();
const TheoremInfo& theorem_info(const std::string& id);

struct TheoremParams {
  std::vector<int> sizes;
  /// s for matching theorems, t for intersecting ones.
  int s_or_t = 1;
};

struct TheoremReport {
  std::string id;
  Regime regime = Regime::kAllN;
  std::string problem;
  BigInt formula_value;
  long optimum = 0;
  bool exhaustive = false;
  Verdict verdict = Verdict::kInconclusive;
  std::optional<std::string> construction_name;
  std::optional<long> construction_size;
  /// The construction is feasible, non-trivial and no larger than the optimum.
  bool construction_ok = true;
  /// Large-size theorem not matched at this small point.
  bool regime_note = false;
  /// An all-size theorem fails, or a construction exceeds the optimum.
  bool contradiction = false;
  std::uint64_t nodes = 0;
  double seconds = 0;
  std::string witness_text;
};

/// Runs the search for the theorem's quantity at the given sizes (sorted
/// into decreasing order) and compares it with the closed form.
TheoremReport verify_theorem(const std::string& id, const TheoremParams& params,
                             const SearchOptions& options = {});

/// One row of a verification suite.
struct SuiteRow {
  std::string suite;
  std::string id;
  std::string params;
  /// EQUAL / SEARCH_BELOW_FORMULA / SEARCH_ABOVE_FORMULA / INCONCLUSIVE for
  /// search rows; PASS / FAIL for arithmetic and structural rows.
  std::string status;
  std::string expected;
  std::string observed;
  bool contradiction = false;
  bool warning = false;
  std::string note;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

struct SuiteOptions {
  std::uint64_t max_vectors = 100;
  int max_n = 4;
  int max_r = 6;
  SearchOptions search;
};

/// Suites: "all-n", "large-n", "formulas", "uniform", "all".
std::vector<SuiteRow> run_suite(const std::string& suite, const SuiteOptions& options);
const std::vector<std::string>& suite_names();

/// Result of the phase-transition comparison at t = r/2 - 1.
struct TieCheck {
  int r = 0;
  int t = 0;
  int max_n = 0;
  bool tie_everywhere = false;
  /// First n where the branches differ, with both values.
  std::optional<long> first_mismatch_n;
  BigInt w_value;
  BigInt k_value;
};

/// Compares the two branches at t = r/2 - 1 for 2 <= n <= max_n. Requires even r >= 4.
TieCheck phase_transition_tie(int r, int max_n);

/// Checks n^(r-1) - (n-1)^(r-1) + n - 1 >= 3n^(r-2) - 2n^(r-3) on the grid;
/// returns the violating (r, n) pairs.
std::vector<std::pair<int, long>> lemma_I1_violations(int max_r, long max_n);

}  // namespace partex
