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

#include "partex/set_family.hpp"

#include <algorithm>

#include "partex/error.hpp"

namespace partex {

SetFamily::SetFamily(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 1 || ground_size > 32) {
    throw InvalidArgument("ground size " + std::to_string(ground_size) + " out of range [1, 32]");
  }
}

SetFamily::SetFamily(int ground_size, std::vector<CoordSet> sets) : SetFamily(ground_size) {
  for (CoordSet s : sets) insert(s);
}

SetFamily::SetFamily(int ground_size, std::initializer_list<std::initializer_list<int>> sets)
    : SetFamily(ground_size) {
  for (const auto& members : sets) {
    CoordSet s;
    for (int x : members) {
      if (x < 1 || x > ground_size) throw InvalidArgument("element " + std::to_string(x) + " outside [r]");
      s.insert(x);
    }
    insert(s);
  }
}

bool SetFamily::contains(CoordSet s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

void SetFamily::insert(CoordSet s) {
  if (!s.is_subset_of(CoordSet::full(ground_size_))) {
    throw InvalidArgument("set " + s.to_string() + " is not a subset of [" + std::to_string(ground_size_) + "]");
  }
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it == sets_.end() || *it != s) sets_.insert(it, s);
}

int SetFamily::min_pairwise_intersection() const {
  int best = ground_size_;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (std::size_t j = i + 1; j < sets_.size(); ++j) best = std::min(best, (sets_[i] & sets_[j]).size());
  }
  return best;
}

bool SetFamily::is_t_intersecting(int t) const { return min_pairwise_intersection() >= t; }

CoordSet SetFamily::common_elements() const {
  CoordSet acc = CoordSet::full(ground_size_);
  for (CoordSet s : sets_) acc = acc & s;
  return acc;
}

bool SetFamily::is_nontrivial_t_intersecting(int t) const {
  return is_t_intersecting(t) && common_elements().size() < t;
}

bool SetFamily::is_uniform(int k) const {
  return std::all_of(sets_.begin(), sets_.end(), [&](CoordSet s) { return s.size() == k; });
}

std::string SetFamily::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) out += ',';
    out += sets_[i].to_string();
  }
  return out + "}";
}

}  // namespace partex
