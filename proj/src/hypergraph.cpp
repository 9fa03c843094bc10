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

#include "hypergraph.hpp"

#include <algorithm>
#include <limits>

#include "partex/error.hpp"

namespace partex::detail {

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<int>> members, std::vector<int> vertex_part)
    : vertex_count_(vertex_count), members_(std::move(members)), vertex_part_(std::move(vertex_part)) {
  incidence_.assign(static_cast<std::size_t>(vertex_count_), Bitset(members_.size()));
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].empty()) throw InvalidArgument("hypergraph members must be nonempty");
    for (int v : members_[i]) {
      if (v < 0 || v >= vertex_count_) throw InvalidArgument("hypergraph vertex out of range");
      incidence_[static_cast<std::size_t>(v)].set(i);
    }
  }
  if (!vertex_part_.empty()) {
    part_count_ = *std::max_element(vertex_part_.begin(), vertex_part_.end()) + 1;
    full_partite_ = std::all_of(members_.begin(), members_.end(), [&](const std::vector<int>& m) {
      if (static_cast<int>(m.size()) != part_count_) return false;
      std::vector<bool> seen(static_cast<std::size_t>(part_count_), false);
      for (int v : m) {
        auto p = static_cast<std::size_t>(vertex_part_[static_cast<std::size_t>(v)]);
        if (seen[p]) return false;
        seen[p] = true;
      }
      return true;
    });
  }
}

Bitset Hypergraph::disjoint_from(std::size_t i, const Bitset& within) const {
  Bitset out = within;
  for (int v : members_[i]) out.subtract(incidence_[static_cast<std::size_t>(v)]);
  return out;
}

int Hypergraph::greedy_matching_size(Bitset live) const {
  int size = 0;
  for (std::size_t i = live.find_first(); i < live.size(); i = live.find_next(i + 1)) {
    ++size;
    for (int v : members_[i]) live.subtract(incidence_[static_cast<std::size_t>(v)]);
  }
  return size;
}

int Hypergraph::greedy_transversal_size(Bitset live) const {
  int size = 0;
  while (live.any()) {
    std::size_t best_v = 0;
    std::size_t best_deg = 0;
    for (int v = 0; v < vertex_count_; ++v) {
      const std::size_t deg = live.intersect_count(incidence_[static_cast<std::size_t>(v)]);
      if (deg > best_deg) {
        best_deg = deg;
        best_v = static_cast<std::size_t>(v);
      }
    }
    live.subtract(incidence_[best_v]);
    ++size;
  }
  return size;
}

int Hypergraph::matching_bound(const Bitset& live) const {
  int bound = greedy_transversal_size(live);
  if (full_partite_) {
    std::vector<int> alive(static_cast<std::size_t>(part_count_), 0);
    for (int v = 0; v < vertex_count_; ++v) {
      if (live.intersects(incidence_[static_cast<std::size_t>(v)])) {
        ++alive[static_cast<std::size_t>(vertex_part_[static_cast<std::size_t>(v)])];
      }
    }
    bound = std::min(bound, *std::min_element(alive.begin(), alive.end()));
  }
  return bound;
}

// Branches on the live vertex of least positive degree: a matching either
// uses one member through it or avoids the vertex entirely.
void Hypergraph::matching_search(const Bitset& live, int current, int& best, int target) const {
  if (current > best) best = current;
  if (best >= target || live.none()) return;
  if (current + matching_bound(live) <= best) return;

  int pivot = -1;
  std::size_t pivot_deg = std::numeric_limits<std::size_t>::max();
  for (int v = 0; v < vertex_count_; ++v) {
    const std::size_t deg = live.intersect_count(incidence_[static_cast<std::size_t>(v)]);
    if (deg > 0 && deg < pivot_deg) {
      pivot_deg = deg;
      pivot = v;
    }
  }
  const Bitset& through = incidence_[static_cast<std::size_t>(pivot)];
  const Bitset branch = live & through;
  for (std::size_t i = branch.find_first(); i < branch.size(); i = branch.find_next(i + 1)) {
    matching_search(disjoint_from(i, live), current + 1, best, target);
    if (best >= target) return;
  }
  matching_search(live - through, current, best, target);
}

int Hypergraph::matching_number(const Bitset& within) const {
  int best = 0;
  matching_search(within, 0, best, std::numeric_limits<int>::max());
  return best;
}

bool Hypergraph::has_matching(const Bitset& within, int k) const {
  if (k <= 0) return true;
  if (static_cast<int>(within.count()) < k) return false;
  if (greedy_matching_size(within) >= k) return true;
  int best = 0;
  matching_search(within, 0, best, k);
  return best >= k;
}

std::vector<std::size_t> Hypergraph::lexleast_maximum_matching() const {
  const Bitset all = all_members();
  int need = matching_number(all);
  std::vector<std::size_t> chosen;
  Bitset live = all;
  for (std::size_t i = 0; i < members_.size() && need > 0; ++i) {
    if (!live.test(i)) continue;
    live.reset(i);
    Bitset rest = disjoint_from(i, live);
    if (has_matching(rest, need - 1)) {
      chosen.push_back(i);
      live = std::move(rest);
      --need;
    }
  }
  if (need != 0) throw InternalConsistencyError("lexicographic matching reconstruction failed");
  return chosen;
}

bool Hypergraph::transversal_search(const Bitset& uncovered, int budget) const {
  if (uncovered.none()) return true;
  if (budget <= 0) return false;
  if (greedy_matching_size(uncovered) > budget) return false;
  // Some vertex of the first uncovered member must be picked.
  const std::size_t first = uncovered.find_first();
  std::vector<int> options = members_[first];
  std::sort(options.begin(), options.end(), [&](int a, int b) {
    return uncovered.intersect_count(incidence_[static_cast<std::size_t>(a)]) >
           uncovered.intersect_count(incidence_[static_cast<std::size_t>(b)]);
  });
  for (int v : options) {
    if (transversal_search(uncovered - incidence_[static_cast<std::size_t>(v)], budget - 1)) return true;
  }
  return false;
}

bool Hypergraph::has_transversal(const Bitset& within, int k) const {
  if (k < 0) return false;
  return transversal_search(within, k);
}

int Hypergraph::transversal_number(const Bitset& within) const {
  int lo = greedy_matching_size(within);
  int hi = greedy_transversal_size(within);
  // Every member of a matching needs its own vertex, so tau >= greedy matching.
  while (lo < hi) {
    if (transversal_search(within, hi - 1)) {
      --hi;
    } else {
      break;
    }
  }
  return hi;
}

bool Hypergraph::lexleast_transversal_search(const Bitset& uncovered, int last, int budget,
                                             std::vector<int>& chosen) const {
  if (uncovered.none()) return true;
  if (budget <= 0) return false;
  if (greedy_matching_size(uncovered) > budget) return false;
  const std::size_t first = uncovered.find_first();
  const int max_option = *std::max_element(members_[first].begin(), members_[first].end());
  for (int v = last + 1; v <= max_option; ++v) {
    const Bitset& inc = incidence_[static_cast<std::size_t>(v)];
    // In a minimum transversal every vertex covers something not yet covered.
    if (!uncovered.intersects(inc)) continue;
    chosen.push_back(v);
    if (lexleast_transversal_search(uncovered - inc, v, budget - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

std::vector<int> Hypergraph::lexleast_minimum_transversal() const {
  const Bitset all = all_members();
  const int tau = transversal_number(all);
  std::vector<int> chosen;
  if (!lexleast_transversal_search(all, -1, tau, chosen)) {
    throw InternalConsistencyError("lexicographic transversal reconstruction failed");
  }
  return chosen;
}

}  // namespace partex::detail
