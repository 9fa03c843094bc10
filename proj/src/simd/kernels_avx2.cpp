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

#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "partex/simd/kernels.hpp"
#include "simd/kernels_internal.hpp"

namespace partex::simd {
namespace avx2 {
namespace {

// Per-byte popcount via the nibble lookup, summed into four 64-bit lanes.
inline __m256i popcount_bytes_to_u64(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                                          2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i cnt =
      _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum_u64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

}  // namespace

void agreement_counts(const std::uint8_t* const* columns, int r, const std::uint8_t* probe,
                      std::size_t count, std::uint8_t* out) {
  std::size_t i = 0;
  for (; i + 32 <= count; i += 32) {
    __m256i acc = _mm256_setzero_si256();
    for (int c = 0; c < r; ++c) {
      const __m256i col = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(columns[c] + i));
      // cmpeq yields 0xff (-1) per matching byte.
      acc = _mm256_sub_epi8(acc, _mm256_cmpeq_epi8(col, _mm256_set1_epi8(static_cast<char>(probe[c]))));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  for (; i < count; ++i) {
    std::uint8_t k = 0;
    for (int c = 0; c < r; ++c) k += columns[c][i] == probe[c];
    out[i] = k;
  }
}

void threshold_mask(const std::uint8_t* counts, std::size_t count, std::uint8_t threshold,
                    std::uint64_t* out) {
  const std::size_t words = (count + 63) / 64;
  std::fill(out, out + words, std::uint64_t{0});
  const __m256i thr = _mm256_set1_epi8(static_cast<char>(threshold));
  std::size_t i = 0;
  for (; i + 32 <= count; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(counts + i));
    // v >= thr (unsigned) iff max(v, thr) == v
    const __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(v, thr), v);
    const auto bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(ge));
    out[i >> 6] |= static_cast<std::uint64_t>(bits) << (i & 63);
  }
  for (; i < count; ++i) {
    if (counts[i] >= threshold) out[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
}

std::uint8_t min_u8(const std::uint8_t* counts, std::size_t count) {
  std::size_t i = 0;
  __m256i m = _mm256_set1_epi8(static_cast<char>(0xff));
  for (; i + 32 <= count; i += 32) {
    m = _mm256_min_epu8(m, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(counts + i)));
  }
  alignas(32) std::uint8_t lanes[32];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), m);
  std::uint8_t best = *std::min_element(lanes, lanes + 32);
  for (; i < count; ++i) best = std::min(best, counts[i]);
  return best;
}

std::size_t popcount(const std::uint64_t* words, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_epi64(
        acc, popcount_bytes_to_u64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i))));
  }
  std::size_t total = horizontal_sum_u64(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
  return total;
}

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount_bytes_to_u64(_mm256_and_si256(va, vb)));
  }
  std::size_t total = horizontal_sum_u64(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

void and_not(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_andnot_si256(vb, va));
  }
  for (; i < n; ++i) out[i] = a[i] & ~b[i];
}

}  // namespace avx2

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{
      Isa::kAvx2,         "avx2",         avx2::agreement_counts, avx2::threshold_mask,
      avx2::min_u8,       avx2::popcount, avx2::popcount_and,     avx2::and_not,
  };
  return table;
}

}  // namespace partex::simd
