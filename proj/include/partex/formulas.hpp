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
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace partex {

using BigInt = boost::multiprecision::cpp_int;

// Closed forms in exact integer arithmetic. Functions taking a list of part
// sizes sort it in decreasing order first, so callers may pass sizes in any
// order. All of them throw InvalidArgument outside their stated range.

/// n^(r-1) - (n-1)^(r-1) + n - 1.  r >= 3, n >= 2.
BigInt m0_s1(int r, long n);
/// s n^(r-1) - (n-1)^(r-1) + n - s.  r >= 3, 1 <= s < n.
BigInt m0_s(int r, long n, long s);
/// n1 + n2 + n3 - 2 for three parts, each >= 2.
BigInt m0_asym3(std::span<const int> sizes);
/// n1 + ... + nr - r + 1.  r >= 3.
BigInt iota0_r_minus_2(std::span<const int> sizes);
/// n^(r-t) - (n-1)^(r-t) + t(n-1).  1 <= t <= r-2.
BigInt iota0_w_branch(int r, int t, long n);
/// (t+2) n^(r-t-1) - (t+1) n^(r-t-2).  1 <= t <= r-2.
BigInt iota0_k_branch(int r, int t, long n);
/// max of the two branches above.
BigInt iota0_symmetric(int r, int t, long n);
/// s times the product of the r-1 largest sizes.  1 <= s <= smallest size.
BigInt matching_product_bound(long s, std::span<const int> sizes);
/// s prod_{l<r} n_l - prod_{l<r} (n_l - 1) + n_r - s.  r >= 3, r != 4, 1 <= s < n_r.
BigInt m0_unbalanced(long s, std::span<const int> sizes);
/// First branch of the four-part value (same expression as m0_unbalanced).
BigInt m0_asym4_first(long s, std::span<const int> sizes);
/// n1 (s n2 n3 - (n2-1)(n3-1) + n4 - s).
BigInt m0_asym4_second(long s, std::span<const int> sizes);
/// max of the two four-part branches.  r = 4, 1 <= s < n_4.
BigInt m0_asym4(long s, std::span<const int> sizes);
/// 3 n^(r-2) - 2 n^(r-3).  r >= 3, n >= 1.
BigInt lemma_I1_rhs(int r, long n);
/// max{r - t, t + 2}.  1 <= t <= r-2.
BigInt uniform_max(int r, int t);
/// rank! (petals - 1)^rank.  rank >= 0, petals >= 1.
BigInt erdos_rado_bound(int rank, int petals);

struct FormulaParams {
  int r = 0;
  std::optional<int> s;
  std::optional<int> t;
  /// Part sizes; for symmetric formulas every entry must be equal.
  std::vector<int> sizes;
};

struct FormulaValue {
  std::string name;
  FormulaParams params;
  BigInt value;
};

/// Names accepted by `formula`.
const std::vector<std::string>& formula_names();

/// Evaluates a formula by name: m0_s1, m0_s, m0_asym3, iota0_r_minus_2,
/// iota0_symmetric, iota0_w_branch, iota0_k_branch, matching_product_bound,
/// m0_unbalanced, m0_asym4, lemma_I1_rhs, uniform_max.
FormulaValue formula(const std::string& name, const FormulaParams& params);

}  // namespace partex
