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

#include <random>
#include <vector>

#include "partex/bitset.hpp"
#include "partex/simd/kernels.hpp"

using namespace partex;

namespace {

std::vector<const simd::KernelTable*> tables() {
  std::vector<const simd::KernelTable*> out{&simd::scalar_kernels()};
  if (simd::avx2_kernels() && simd::cpu_supports_avx2()) out.push_back(simd::avx2_kernels());
  return out;
}

}  // namespace

TEST(kernels, agreement_counts_match_reference) {
  std::mt19937_64 rng(3);
  for (std::size_t count : {0u, 1u, 31u, 32u, 33u, 100u, 1000u}) {
    for (int r = 2; r <= 9; ++r) {
      std::vector<std::vector<std::uint8_t>> cols(static_cast<std::size_t>(r), std::vector<std::uint8_t>(count));
      std::vector<const std::uint8_t*> ptrs;
      for (auto& c : cols) {
        for (auto& x : c) x = static_cast<std::uint8_t>(1 + rng() % 3);
        ptrs.push_back(c.data());
      }
      std::vector<std::uint8_t> probe(static_cast<std::size_t>(r));
      for (auto& x : probe) x = static_cast<std::uint8_t>(1 + rng() % 3);
      std::vector<std::uint8_t> expect(count);
      for (std::size_t i = 0; i < count; ++i)
        for (int c = 0; c < r; ++c) expect[i] += cols[static_cast<std::size_t>(c)][i] == probe[static_cast<std::size_t>(c)];
      for (const auto* k : tables()) {
        std::vector<std::uint8_t> got(count, 77);
        k->agreement_counts(ptrs.data(), r, probe.data(), count, got.data());
        EXPECT_EQ(got, expect) << k->name << " count=" << count << " r=" << r;
        for (std::uint8_t th = 0; th <= static_cast<std::uint8_t>(r); ++th) {
          std::vector<std::uint64_t> mask((count + 63) / 64, ~0ull);
          k->threshold_mask(expect.data(), count, th, mask.data());
          for (std::size_t i = 0; i < mask.size() * 64; ++i) {
            bool bit = (mask[i / 64] >> (i % 64)) & 1u;
            EXPECT_EQ(bit, i < count && expect[i] >= th) << k->name;
          }
        }
        std::uint8_t mn = 255;
        for (auto x : expect) mn = std::min(mn, x);
        EXPECT_EQ(k->min_u8(expect.data(), count), mn) << k->name;
      }
    }
  }
}

TEST(kernels, word_ops_match_reference) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 64u}) {
    std::vector<std::uint64_t> a(n), b(n);
    for (auto& w : a) w = rng();
    for (auto& w : b) w = rng();
    std::size_t pc = 0, pca = 0;
    std::vector<std::uint64_t> andnot(n);
    for (std::size_t i = 0; i < n; ++i) {
      pc += static_cast<std::size_t>(std::popcount(a[i]));
      pca += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
      andnot[i] = a[i] & ~b[i];
    }
    for (const auto* k : tables()) {
      EXPECT_EQ(k->popcount(a.data(), n), pc) << k->name;
      EXPECT_EQ(k->popcount_and(a.data(), b.data(), n), pca) << k->name;
      std::vector<std::uint64_t> out(n);
      k->and_not(a.data(), b.data(), out.data(), n);
      EXPECT_EQ(out, andnot) << k->name;
    }
  }
}

TEST(bitset, operations) {
  Bitset a = Bitset::full(130);
  EXPECT_EQ(a.count(), 130u);
  EXPECT_EQ(a.word_count(), 3u);
  Bitset b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  EXPECT_EQ(b.to_indices(), (std::vector<std::size_t>{0, 64, 129}));
  EXPECT_EQ(b.find_next(1), 64u);
  EXPECT_EQ(b.find_next(130), 130u);
  EXPECT_TRUE(b.is_subset_of(a));
  EXPECT_EQ((a - b).count(), 127u);
  EXPECT_EQ(a.intersect_count(b), 3u);
  b.reset(64);
  EXPECT_FALSE(b.test(64));
  b.clear();
  EXPECT_TRUE(b.none());
}
