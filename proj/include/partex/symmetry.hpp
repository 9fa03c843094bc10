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
#include <random>
#include <vector>

#include "partex/family.hpp"
#include "partex/set_family.hpp"

namespace partex {

/// An automorphism of X_1 x ... x X_r: per-part symbol bijections followed
/// by a permutation of parts of equal size.
struct Relabeling {
  /// symbol_maps[l-1][x-1] is the new symbol for symbol x of part l.
  std::vector<std::vector<int>> symbol_maps;
  /// New part i holds old part part_order[i-1].
  std::vector<int> part_order;

  static Relabeling identity(const PartSpec& spec);
};

/// Applies `g`. Throws InvalidArgument if `g` is not a valid automorphism
/// of f.spec().
Family relabel(const Family& f, const Relabeling& g);

/// A uniformly random automorphism (equal-size parts may be swapped).
Relabeling random_relabeling(const PartSpec& spec, std::mt19937_64& rng);

/// Group elements examined by canonical_form before it falls back.
inline constexpr std::uint64_t kDefaultCanonicalCap = 2'000'000;

struct CanonicalForm {
  Family family;
  /// False when the orbit was too large to scan and a heuristic was used.
  bool exact = true;
};

/// The lexicographically least family (as a sorted edge list) in the orbit
/// of `f` under the automorphism group.
CanonicalForm canonical_form(const Family& f, std::uint64_t cap = kDefaultCanonicalCap);

/// Lexicographically least image of `h` under permutations of [ground].
SetFamily canonical_set_family(const SetFamily& h);

/// Equal canonical forms under permutations of the ground set.
bool isomorphic(const SetFamily& a, const SetFamily& b);

}  // namespace partex
