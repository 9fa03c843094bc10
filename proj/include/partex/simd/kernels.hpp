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

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops used by the analysis and search code. Each
// kernel has a portable scalar reference implementation; an AVX2 variant is
// compiled separately and chosen at runtime when the CPU supports it.
// Setting PARTEX_SIMD=scalar in the environment forces the reference path.

namespace partex::simd {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  // out[i] = #{ c < r : columns[c][i] == probe[c] } for every i < count.
  // Columns are structure-of-arrays coordinate vectors (one byte per symbol).
  void (*agreement_counts)(const std::uint8_t* const* columns, int r, const std::uint8_t* probe,
                           std::size_t count, std::uint8_t* out);
  // Bit i of `out` is set iff counts[i] >= threshold. `out` receives
  // ceil(count / 64) words; bits past `count` are cleared.
  void (*threshold_mask)(const std::uint8_t* counts, std::size_t count, std::uint8_t threshold,
                         std::uint64_t* out);
  // Minimum of counts[0..count); 255 when count == 0.
  std::uint8_t (*min_u8)(const std::uint8_t* counts, std::size_t count);
  std::size_t (*popcount)(const std::uint64_t* words, std::size_t n);
  std::size_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // out = a & ~b
  void (*and_not)(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
                  std::size_t n);
};

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_kernels();
bool cpu_supports_avx2();
/// The table selected for this process (decided once, on first use).
const KernelTable& active_kernels();

}  // namespace partex::simd
