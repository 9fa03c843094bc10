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

#include <string>

#include "partex/family.hpp"
#include "partex/formulas.hpp"
#include "partex/set_family.hpp"

namespace partex {

/// Every vector F whose projection P(F) contains some member of `h`.
/// Requires h.ground_size() == spec.r().
Family extend(const SetFamily& h, const PartSpec& spec);

/// W_r = {{l, r} : l < r} u {[r-1]} over [r]. Requires r >= 3.
SetFamily template_W_r(int r);
/// W_{r,t} = {[t] u {l} : t < l <= r} u {[r] \ {l} : l <= t}. Requires 1 <= t <= r-2.
SetFamily template_W_rt(int r, int t);
/// K_{r,t}: the (t+1)-subsets of [t+2], over ground set [r]. Requires 1 <= t <= r-2.
SetFamily template_K_rt(int r, int t);

/// extend(W_r). Requires r >= 3.
Family construct_W_r(const PartSpec& spec);

enum class ERoute {
  /// All vectors with a_r <= s, minus those with a_1..a_{r-1} >= 2 and
  /// a_r = 1, plus (1, ..., 1, b) for s < b <= n.
  kDirect,
  /// W_r(n) together with every vector whose last coordinate is in [2, s].
  kFromWr,
};

/// E(r, s, n). Requires equal part sizes n, r >= 3 and 1 <= s < n.
Family construct_E(const PartSpec& spec, int s, ERoute route = ERoute::kDirect);

/// extend(W_{r,t}). Requires 1 <= t <= r-2.
Family construct_W_rt(const PartSpec& spec, int t);

/// extend(K_{r,t}). Requires 1 <= t <= r-2.
Family construct_K_rt(const PartSpec& spec, int t);

/// {[t] u {i} : t < i <= r}. Requires 1 <= t <= r-2.
SetFamily construct_uniform_star(int r, int t);

/// All (t+1)-subsets of [t+2], over ground set `ground` (t+2 when 0).
SetFamily construct_uniform_simplex(int t, int ground = 0);

/// Closed-form size of a named partite construction (W_r, E, W_rt, K_rt)
/// for equal part sizes.
FormulaValue construction_formula(const std::string& name, const PartSpec& spec, int s_or_t);

/// Builds a named partite construction. `s_or_t` is ignored for W_r.
Family construct_by_name(const std::string& name, const PartSpec& spec, int s_or_t);

}  // namespace partex
