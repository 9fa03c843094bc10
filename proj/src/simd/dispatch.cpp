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

#include <cstdlib>
#include <string_view>

#include "partex/simd/kernels.hpp"
#include "simd/kernels_internal.hpp"

namespace partex::simd {

bool cpu_supports_avx2() {
#if defined(PARTEX_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelTable* avx2_kernels() {
#if defined(PARTEX_HAVE_AVX2)
  return &avx2_kernel_table();
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& table = [&]() -> const KernelTable& {
    const char* forced = std::getenv("PARTEX_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
    if (const KernelTable* avx = avx2_kernels(); avx != nullptr && cpu_supports_avx2()) return *avx;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace partex::simd
