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

#include "partex/shifting.hpp"

#include <set>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "partex/analysis.hpp"
#include "partex/error.hpp"

namespace partex {
namespace {

using boost::multiprecision::cpp_int;

void check_part(const Family& f, int part) {
  if (part < 1 || part > f.spec().r()) {
    throw InvalidArgument("part " + std::to_string(part) + " outside [1, " + std::to_string(f.spec().r()) + "]");
  }
}

bool is_trivial_for(const Family& f, int t) { return fixed_coordinates(f)->size() >= t; }

void require_nontrivial(const Family& f, int t) {
  if (t < 1 || t >= f.spec().r()) throw InvalidArgument("t = " + std::to_string(t) + " outside [1, r-1]");
  if (!is_nontrivial_intersecting_family(f, t)) {
    throw PreconditionViolated("family is not a non-trivial " + std::to_string(t) + "-intersecting family");
  }
}

cpp_int ipow(long base, long exp) {
  cpp_int out = 1;
  for (long i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

ShiftOutcome apply_shift(const Family& f, int part, int symbol) {
  check_part(f, part);
  if (symbol < 2 || symbol > f.spec().size(part)) {
    throw InvalidArgument("shift symbol " + std::to_string(symbol) + " outside [2, " +
                          std::to_string(f.spec().size(part)) + "]");
  }
  std::vector<Edge> out;
  out.reserve(f.size());
  int moved = 0;
  int blocked = 0;
  for (const Edge& e : f) {
    if (e.coord(part) != symbol) {
      out.push_back(e);
      continue;
    }
    Edge image = e;
    image.set_coord(part, 1);
    if (f.contains(image)) {
      out.push_back(e);
      ++blocked;
    } else {
      out.push_back(image);
      ++moved;
    }
  }
  return ShiftOutcome{make_family(f.spec(), std::move(out)), moved, blocked};
}

bool is_part_shifted(const Family& f, int part) {
  check_part(f, part);
  for (const Edge& e : f) {
    if (e.coord(part) == 1) continue;
    Edge image = e;
    image.set_coord(part, 1);
    if (!f.contains(image)) return false;
  }
  return true;
}

bool is_coordinatewise_shifted(const Family& f) {
  for (int part = 1; part <= f.spec().r(); ++part) {
    if (!is_part_shifted(f, part)) return false;
  }
  return true;
}

std::optional<int> detect_shift_resistance(const Family& f, int t, int part) {
  check_part(f, part);
  require_nontrivial(f, t);
  std::optional<int> witness;
  for (int x = 2; x <= f.spec().size(part); ++x) {
    const auto outcome = apply_shift(f, part, x);
    if (outcome.moved_count == 0 || !is_trivial_for(outcome.family, t)) continue;
    if (witness) {
      throw InternalConsistencyError("part " + std::to_string(part) + " has two resistance witnesses (" +
                                     std::to_string(*witness) + " and " + std::to_string(x) + ")");
    }
    witness = x;
  }
  return witness;
}

ClosureResult shift_closure_preserving_nontriviality(const Family& f, int t) {
  require_nontrivial(f, t);
  Family current = f;
  int steps = 0;
  std::set<std::pair<int, int>> skipped;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int part = 1; part <= current.spec().r(); ++part) {
      for (int j = 2; j <= current.spec().size(part); ++j) {
        if (skipped.contains({part, j})) continue;
        auto outcome = apply_shift(current, part, j);
        if (outcome.moved_count == 0) continue;
        if (is_trivial_for(outcome.family, t)) {
          skipped.insert({part, j});
          continue;
        }
        current = std::move(outcome.family);
        ++steps;
        skipped.clear();
        changed = true;
      }
    }
  }

  ResistanceReport report;
  for (int part = 1; part <= current.spec().r(); ++part) {
    if (is_part_shifted(current, part)) {
      report.shifted_parts.push_back(part);
    } else if (auto x = detect_shift_resistance(current, t, part)) {
      report.resistant_parts[part] = *x;
    } else {
      throw InternalConsistencyError("closure stopped with part " + std::to_string(part) +
                                     " neither shifted nor resistant");
    }
  }
  return ClosureResult{std::move(current), std::move(report), steps};
}

bool StructureReport::all_passed() const {
  for (const auto& c : structural)
    if (!c.passed) return false;
  for (const auto& c : bounds)
    if (!c.passed) return false;
  return true;
}

StructureReport verify_structure_lemmas(const Family& f, int t) {
  require_nontrivial(f, t);
  const PartSpec& spec = f.spec();
  const int r = spec.r();
  StructureReport report;
  report.coordinatewise_shifted = is_coordinatewise_shifted(f);
  if (report.coordinatewise_shifted) return report;

  std::map<int, int> resistant;
  for (int part = 1; part <= r; ++part) {
    if (is_part_shifted(f, part)) continue;
    auto x = detect_shift_resistance(f, t, part);
    if (!x) {
      throw PreconditionViolated("part " + std::to_string(part) + " is neither shifted nor shift-resistant");
    }
    resistant[part] = *x;
  }

  const int fixed = fixed_coordinates(f)->size();
  for (const auto& [part, x] : resistant) {
    const std::string tag = "part " + std::to_string(part) + ", x=" + std::to_string(x) + ": ";
    report.structural.push_back({tag + "fixed coordinates = t-1", fixed == t - 1,
                                 "|fixed| = " + std::to_string(fixed) + ", t-1 = " + std::to_string(t - 1)});
    bool only_1_or_x = true;
    bool has_1 = false;
    bool has_x = false;
    bool x_edges_all_move = true;
    for (const Edge& e : f) {
      const int a = e.coord(part);
      if (a == 1) has_1 = true;
      else if (a == x) has_x = true;
      else only_1_or_x = false;
      if (a == x) {
        Edge image = e;
        image.set_coord(part, 1);
        if (f.contains(image)) x_edges_all_move = false;
      }
    }
    report.structural.push_back({tag + "only symbols 1 and x occur", only_1_or_x, ""});
    report.structural.push_back({tag + "symbols 1 and x both occur", has_1 && has_x, ""});
    report.structural.push_back({tag + "no x-edge stays fixed under the x-shift", x_edges_all_move, ""});
  }

  const int b = static_cast<int>(resistant.size());
  report.bounds.push_back({"at least two resistant parts", b >= 2, "b = " + std::to_string(b)});
  if (!spec.is_uniform()) {
    report.bounds.push_back({"size bounds", true, "skipped: part sizes differ"});
    return report;
  }
  const long n = spec.size(1);
  const cpp_int size = static_cast<long>(f.size());
  // |F| <= 2^(b-1) n^(r-b-t+1); written multiplicatively when the exponent is negative.
  const long e = r - b - t + 1;
  const cpp_int pow2 = ipow(2, b - 1);
  const bool first_ok = e >= 0 ? size <= pow2 * ipow(n, e) : size * ipow(n, -e) <= pow2;
  report.bounds.push_back({"|F| <= 2^(b-1) n^(r-b-t+1)", first_ok,
                           "|F| = " + size.str() + ", b = " + std::to_string(b)});
  const cpp_int second = (t + 2) * ipow(n, r - t - 1) - (t + 1) * ipow(n, r - t - 2);
  report.bounds.push_back({"|F| <= (t+2)n^(r-t-1) - (t+1)n^(r-t-2)", size <= second,
                           "|F| = " + size.str() + ", bound = " + second.str()});
  return report;
}

}  // namespace partex
