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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "partex/family.hpp"

namespace partex {

// The (1 <- j)-shift at part l replaces symbol j by 1 in coordinate l,
// unless the altered vector is already an edge of the family. Family size
// is preserved.

struct ShiftOutcome {
  Family family;
  /// Edges whose coordinate was rewritten to 1.
  int moved_count = 0;
  /// Edges with coordinate j left alone because the image already existed.
  int blocked_count = 0;
};

/// Per-part classification at a closure fixpoint.
struct ResistanceReport {
  /// part -> the symbol x whose shift would make the family trivial.
  std::map<int, int> resistant_parts;
  /// Parts where every shift is the identity.
  std::vector<int> shifted_parts;
};

/// Requires 2 <= symbol <= n_part.
ShiftOutcome apply_shift(const Family& f, int part, int symbol);

/// Every shift at `part` is the identity.
bool is_part_shifted(const Family& f, int part);

/// is_part_shifted for every part.
bool is_coordinatewise_shifted(const Family& f);

/// The unique symbol x whose shift at `part` renders `f` trivial, if any.
/// Requires `f` non-trivial t-intersecting (PreconditionViolated otherwise).
std::optional<int> detect_shift_resistance(const Family& f, int t, int part);

struct ClosureResult {
  Family family;
  ResistanceReport report;
  /// Number of accepted (non-identity) shifts.
  int steps = 0;
};

/// Applies shifts round-robin (parts 1..r, symbols 2..n_l) skipping any that
/// would make the family trivial, until a full pass accepts nothing. A
/// skipped (part, symbol) pair is retried after the next accepted change.
/// Requires `f` non-trivial t-intersecting.
ClosureResult shift_closure_preserving_nontriviality(const Family& f, int t);

struct LemmaCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct StructureReport {
  bool coordinatewise_shifted = false;
  /// Structural checks per resistant part (empty when shifted).
  std::vector<LemmaCheck> structural;
  /// Size bounds for fixpoints that are not coordinate-wise shifted.
  std::vector<LemmaCheck> bounds;
  bool all_passed() const;
};

/// Checks the structure forced on a closure fixpoint:
///  * per resistant part l with witness x: |fixed coords| = t-1, only
///    symbols 1 and x occur at l (both do), and no edge with symbol x at l
///    stays in place under the x-shift;
///  * if not coordinate-wise shifted: at least two resistant parts,
///    |F| <= 2^(b-1) n^(r-b-t+1) and |F| <= (t+2)n^(r-t-1) - (t+1)n^(r-t-2)
///    (the size bounds need equal part sizes and are skipped otherwise).
/// Requires a non-trivial t-intersecting family where each part is shifted
/// or resistant.
StructureReport verify_structure_lemmas(const Family& f, int t);

}  // namespace partex
