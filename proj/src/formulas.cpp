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

#include "partex/formulas.hpp"

#include <algorithm>
#include <functional>

#include "partex/error.hpp"

namespace partex {
namespace {

BigInt ipow(long base, long exp) {
  BigInt out = 1;
  for (long i = 0; i < exp; ++i) out *= base;
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

std::vector<long> sorted_desc(std::span<const int> sizes) {
  std::vector<long> out(sizes.begin(), sizes.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  for (long n : out) require(n >= 2, "part sizes must be >= 2");
  return out;
}

void require_rt(int r, int t) {
  require(r >= 3, "r must be >= 3 (got " + std::to_string(r) + ")");
  require(t >= 1 && t <= r - 2, "t must lie in [1, r-2] (got t=" + std::to_string(t) + ", r=" + std::to_string(r) + ")");
}

BigInt prod_first(const std::vector<long>& n, std::size_t count, long shift) {
  BigInt out = 1;
  for (std::size_t i = 0; i < count; ++i) out *= n[i] - shift;
  return out;
}

}  // namespace

BigInt m0_s1(int r, long n) { return m0_s(r, n, 1); }

BigInt m0_s(int r, long n, long s) {
  require(r >= 3, "r must be >= 3 (got " + std::to_string(r) + ")");
  require(n >= 2, "n must be >= 2");
  require(s >= 1 && s < n, "s must lie in [1, n-1] (got s=" + std::to_string(s) + ", n=" + std::to_string(n) + ")");
  return s * ipow(n, r - 1) - ipow(n - 1, r - 1) + n - s;
}

BigInt m0_asym3(std::span<const int> sizes) {
  require(sizes.size() == 3, "m0_asym3 takes exactly three part sizes");
  const auto n = sorted_desc(sizes);
  return BigInt(n[0] + n[1] + n[2] - 2);
}

BigInt iota0_r_minus_2(std::span<const int> sizes) {
  require(sizes.size() >= 3, "r must be >= 3");
  const auto n = sorted_desc(sizes);
  BigInt sum = 0;
  for (long x : n) sum += x;
  return sum - static_cast<long>(n.size()) + 1;
}

BigInt iota0_w_branch(int r, int t, long n) {
  require_rt(r, t);
  require(n >= 2, "n must be >= 2");
  return ipow(n, r - t) - ipow(n - 1, r - t) + BigInt(t) * (n - 1);
}

BigInt iota0_k_branch(int r, int t, long n) {
  require_rt(r, t);
  require(n >= 2, "n must be >= 2");
  return BigInt(t + 2) * ipow(n, r - t - 1) - BigInt(t + 1) * ipow(n, r - t - 2);
}

BigInt iota0_symmetric(int r, int t, long n) { return std::max(iota0_w_branch(r, t, n), iota0_k_branch(r, t, n)); }

BigInt matching_product_bound(long s, std::span<const int> sizes) {
  require(sizes.size() >= 2, "at least two parts required");
  const auto n = sorted_desc(sizes);
  require(s >= 1 && s <= n.back(), "s must lie in [1, n_r]");
  return s * prod_first(n, n.size() - 1, 0);
}

BigInt m0_asym4_first(long s, std::span<const int> sizes) {
  require(sizes.size() >= 3, "r must be >= 3");
  const auto n = sorted_desc(sizes);
  require(s >= 1 && s < n.back(), "s must lie in [1, n_r - 1]");
  const std::size_t r = n.size();
  return s * prod_first(n, r - 1, 0) - prod_first(n, r - 1, 1) + n.back() - s;
}

BigInt m0_unbalanced(long s, std::span<const int> sizes) {
  require(sizes.size() != 4, "r = 4 has its own two-branch value (m0_asym4)");
  return m0_asym4_first(s, sizes);
}

BigInt m0_asym4_second(long s, std::span<const int> sizes) {
  require(sizes.size() == 4, "m0_asym4 takes exactly four part sizes");
  const auto n = sorted_desc(sizes);
  require(s >= 1 && s < n[3], "s must lie in [1, n_4 - 1]");
  return n[0] * (s * n[1] * n[2] - (n[1] - 1) * (n[2] - 1) + n[3] - s);
}

BigInt m0_asym4(long s, std::span<const int> sizes) {
  require(sizes.size() == 4, "m0_asym4 takes exactly four part sizes");
  return std::max(m0_asym4_first(s, sizes), m0_asym4_second(s, sizes));
}

BigInt lemma_I1_rhs(int r, long n) {
  require(r >= 3, "r must be >= 3");
  require(n >= 1, "n must be >= 1");
  return 3 * ipow(n, r - 2) - 2 * ipow(n, r - 3);
}

BigInt uniform_max(int r, int t) {
  require_rt(r, t);
  return BigInt(std::max(r - t, t + 2));
}

BigInt erdos_rado_bound(int rank, int petals) {
  require(rank >= 0, "rank must be >= 0");
  require(petals >= 1, "petal count must be >= 1");
  BigInt fact = 1;
  for (int i = 2; i <= rank; ++i) fact *= i;
  return fact * ipow(petals - 1, rank);
}

const std::vector<std::string>& formula_names() {
  static const std::vector<std::string> names = {
      "m0_s1",          "m0_s",         "m0_asym3",      "iota0_r_minus_2", "iota0_symmetric", "iota0_w_branch",
      "iota0_k_branch", "matching_product_bound", "m0_unbalanced", "m0_asym4",        "lemma_I1_rhs",    "uniform_max"};
  return names;
}

FormulaValue formula(const std::string& name, const FormulaParams& p) {
  auto need_s = [&]() -> int {
    require(p.s.has_value(), name + " needs s");
    return *p.s;
  };
  auto need_t = [&]() -> int {
    require(p.t.has_value(), name + " needs t");
    return *p.t;
  };
  auto sizes = [&]() -> std::span<const int> {
    require(static_cast<int>(p.sizes.size()) == p.r, name + " needs r part sizes");
    return p.sizes;
  };
  auto uniform_n = [&]() -> long {
    const auto sz = sizes();
    require(!sz.empty() && std::all_of(sz.begin(), sz.end(), [&](int x) { return x == sz[0]; }),
            name + " needs equal part sizes");
    return sz[0];
  };

  BigInt value;
  if (name == "m0_s1") value = m0_s1(p.r, uniform_n());
  else if (name == "m0_s") value = m0_s(p.r, uniform_n(), need_s());
  else if (name == "m0_asym3") value = m0_asym3(sizes());
  else if (name == "iota0_r_minus_2") value = iota0_r_minus_2(sizes());
  else if (name == "iota0_symmetric") value = iota0_symmetric(p.r, need_t(), uniform_n());
  else if (name == "iota0_w_branch") value = iota0_w_branch(p.r, need_t(), uniform_n());
  else if (name == "iota0_k_branch") value = iota0_k_branch(p.r, need_t(), uniform_n());
  else if (name == "matching_product_bound") value = matching_product_bound(need_s(), sizes());
  else if (name == "m0_unbalanced") value = m0_unbalanced(need_s(), sizes());
  else if (name == "m0_asym4") value = m0_asym4(need_s(), sizes());
  else if (name == "lemma_I1_rhs") value = lemma_I1_rhs(p.r, uniform_n());
  else if (name == "uniform_max") value = uniform_max(p.r, need_t());
  else throw InvalidArgument("unknown formula '" + name + "'");
  return FormulaValue{name, p, value};
}

}  // namespace partex
