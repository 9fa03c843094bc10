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

#include <algorithm>
#include <bit>

#include "partex/simd/kernels.hpp"
#include "simd/kernels_internal.hpp"

namespace partex::simd {
namespace scalar {

void agreement_counts(const std::uint8_t* const* columns, int r, const std::uint8_t* probe,
                      std::size_t count, std::uint8_t* out) {
  std::fill(out, out + count, std::uint8_t{0});
  for (int c = 0; c < r; ++c) {
    const std::uint8_t* col = columns[c];
    const std::uint8_t p = probe[c];
    for (std::size_t i = 0; i < count; ++i) out[i] += col[i] == p;
  }
}

void threshold_mask(const std::uint8_t* counts, std::size_t count, std::uint8_t threshold,
                    std::uint64_t* out) {
  const std::size_t words = (count + 63) / 64;
  std::fill(out, out + words, std::uint64_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    if (counts[i] >= threshold) out[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
}

std::uint8_t min_u8(const std::uint8_t* counts, std::size_t count) {
  std::uint8_t m = 255;
  for (std::size_t i = 0; i < count; ++i) m = std::min(m, counts[i]);
  return m;
}

std::size_t popcount(const std::uint64_t* words, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
  return total;
}

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

void and_not(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] & ~b[i];
}

}  // namespace scalar

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      Isa::kScalar,         "scalar",         scalar::agreement_counts, scalar::threshold_mask,
      scalar::min_u8,       scalar::popcount, scalar::popcount_and,     scalar::and_not,
  };
  return table;
}

}  // namespace partex::simd
