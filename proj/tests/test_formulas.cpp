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

#include <gtest/gtest.h>

#include "partex/error.hpp"
#include "partex/formulas.hpp"

using namespace partex;

namespace {

long ipow(long b, int e) {
  long v = 1;
  for (int i = 0; i < e; ++i) v *= b;
  return v;
}

}  // namespace

TEST(formulas, anchor_values) {
  EXPECT_EQ(m0_s1(4, 2), 8);
  EXPECT_EQ(m0_s1(3, 2), 4);
  EXPECT_EQ(m0_s1(4, 3), 21);
  EXPECT_EQ(m0_s(3, 3, 2), 15);
  std::vector<int> a{3, 2, 2};
  EXPECT_EQ(m0_asym3(a), 5);
  std::vector<int> four{2, 2, 2, 2};
  EXPECT_EQ(iota0_r_minus_2(four), 5);
  EXPECT_EQ(iota0_w_branch(4, 2, 2), 5);
  EXPECT_EQ(iota0_k_branch(4, 2, 2), 5);
  EXPECT_EQ(iota0_symmetric(4, 2, 2), 5);
  EXPECT_EQ(iota0_k_branch(4, 1, 2), 8);
  EXPECT_EQ(uniform_max(5, 1), 4);
  EXPECT_EQ(uniform_max(6, 3), 5);
  EXPECT_EQ(erdos_rado_bound(2, 3), 8);
  EXPECT_EQ(erdos_rado_bound(3, 4), 6 * 27);
}

TEST(formulas, sizes_sorted_before_use) {
  std::vector<int> up{2, 2, 3}, down{3, 2, 2};
  EXPECT_EQ(m0_asym3(up), m0_asym3(down));
  std::vector<int> u4{2, 3, 4, 4}, d4{4, 4, 3, 2};
  EXPECT_EQ(m0_asym4(1, u4), m0_asym4(1, d4));
  EXPECT_EQ(matching_product_bound(1, u4), 4 * 4 * 3);
}

TEST(formulas, grid_against_plain_arithmetic) {
  for (int r = 3; r <= 8; ++r)
    for (long n = 2; n <= 9; ++n) {
      EXPECT_EQ(m0_s1(r, n), ipow(n, r - 1) - ipow(n - 1, r - 1) + n - 1);
      for (long s = 1; s < n; ++s) EXPECT_EQ(m0_s(r, n, s), s * ipow(n, r - 1) - ipow(n - 1, r - 1) + n - s);
      for (int t = 1; t <= r - 2; ++t) {
        long w = ipow(n, r - t) - ipow(n - 1, r - t) + t * (n - 1);
        long k = (t + 2) * ipow(n, r - t - 1) - (t + 1) * ipow(n, r - t - 2);
        EXPECT_EQ(iota0_w_branch(r, t, n), w);
        EXPECT_EQ(iota0_k_branch(r, t, n), k);
        EXPECT_EQ(iota0_symmetric(r, t, n), std::max(w, k));
      }
      EXPECT_EQ(lemma_I1_rhs(r, n), 3 * ipow(n, r - 2) - 2 * ipow(n, r - 3));
    }
}

TEST(formulas, asymmetric_branches) {
  std::vector<int> sizes{4, 3, 3, 3};
  // s n1 n2 n3 - (n1-1)(n2-1)(n3-1) + n4 - s
  EXPECT_EQ(m0_asym4_first(1, sizes), 36 - 12 + 3 - 1);
  // n1 (s n2 n3 - (n2-1)(n3-1) + n4 - s)
  EXPECT_EQ(m0_asym4_second(1, sizes), 4 * (9 - 4 + 3 - 1));
  EXPECT_EQ(m0_asym4(1, sizes), 28);
  std::vector<int> three{4, 4, 3};
  EXPECT_EQ(m0_unbalanced(2, three), 2 * 16 - 9 + 3 - 2);
  std::vector<int> r4{3, 3, 3, 3};
  EXPECT_THROW(m0_unbalanced(1, r4), InvalidArgument);
}

TEST(formulas, exceeds_64_bits) {
  BigInt v = m0_s1(12, 100);
  BigInt expect = BigInt(100);
  for (int i = 1; i < 11; ++i) expect *= 100;
  BigInt tail = 99;
  for (int i = 1; i < 11; ++i) tail *= 99;
  EXPECT_EQ(v, expect - tail + 99);
  EXPECT_GT(v, BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST(formulas, domain_errors) {
  EXPECT_THROW(m0_s1(2, 3), InvalidArgument);
  EXPECT_THROW(m0_s1(3, 1), InvalidArgument);
  EXPECT_THROW(m0_s(3, 3, 3), InvalidArgument);
  EXPECT_THROW(m0_s(3, 3, 0), InvalidArgument);
  EXPECT_THROW(iota0_w_branch(4, 3, 2), InvalidArgument);
  EXPECT_THROW(uniform_max(3, 2), InvalidArgument);
  std::vector<int> two{3, 2};
  EXPECT_THROW(m0_asym3(two), InvalidArgument);
}

TEST(formulas, dispatch_by_name) {
  FormulaParams p;
  p.r = 4;
  p.t = 2;
  p.sizes = {2, 2, 2, 2};
  EXPECT_EQ(formula("iota0_symmetric", p).value, 5);
  EXPECT_EQ(formula("iota0_r_minus_2", p).value, 5);
  FormulaParams q;
  q.r = 3;
  q.s = 1;
  q.sizes = {3, 2, 2};
  EXPECT_EQ(formula("m0_asym3", q).value, 5);
  EXPECT_THROW(formula("m0_s1", q), InvalidArgument);
  EXPECT_THROW(formula("no_such_formula", q), InvalidArgument);
  for (const auto& name : formula_names()) EXPECT_FALSE(name.empty());
}
