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
#include <cstdint>

#include "partex/constructions.hpp"
#include "partex/error.hpp"
#include "partex/search.hpp"

namespace partex {
namespace {

// Bron-Kerbosch with pivoting over at most 70 vertices (C(8,4)).
class MaxCliques {
 public:
  MaxCliques(std::size_t n, std::vector<std::vector<bool>> adj) : n_(n), adj_(std::move(adj)) {}

  void run() {
    std::vector<std::size_t> r;
    std::vector<std::size_t> p(n_);
    for (std::size_t i = 0; i < n_; ++i) p[i] = i;
    expand(r, p, {});
  }

  std::size_t best_size() const { return best_; }
  const std::vector<std::vector<std::size_t>>& best() const { return cliques_; }

 private:
  void expand(std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
    if (p.empty() && x.empty()) {
      if (r.size() > best_) {
        best_ = r.size();
        cliques_.clear();
      }
      if (r.size() == best_) cliques_.push_back(r);
      return;
    }
    if (r.size() + p.size() < best_) return;
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t pivot_deg = 0;
    for (const auto* set : {&p, &x}) {
      for (std::size_t u : *set) {
        std::size_t d = 0;
        for (std::size_t v : p) d += adj_[u][v];
        if (d > pivot_deg) {
          pivot_deg = d;
          pivot = u;
        }
      }
    }
    std::vector<std::size_t> branch;
    for (std::size_t v : p)
      if (!adj_[pivot][v]) branch.push_back(v);
    for (std::size_t v : branch) {
      std::vector<std::size_t> np;
      std::vector<std::size_t> nx;
      for (std::size_t u : p)
        if (adj_[v][u]) np.push_back(u);
      for (std::size_t u : x)
        if (adj_[v][u]) nx.push_back(u);
      r.push_back(v);
      expand(r, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  std::size_t n_;
  std::vector<std::vector<bool>> adj_;
  std::size_t best_ = 0;
  std::vector<std::vector<std::size_t>> cliques_;
};

}  // namespace

UniformResult solve_uniform(int r, int t) {
  if (r > 8) throw InvalidArgument("solve_uniform supports r <= 8 (got " + std::to_string(r) + ")");
  if (t < 1 || t > r - 2) {
    throw InvalidArgument("t must lie in [1, r-2] (got t=" + std::to_string(t) + ", r=" + std::to_string(r) + ")");
  }
  std::vector<CoordSet> sets;
  for (std::uint32_t bits = 0; bits < (1u << r); ++bits)
    if (std::popcount(bits) == t + 1) sets.emplace_back(bits);
  const std::size_t n = sets.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = i != j && (sets[i] & sets[j]).size() >= t;

  MaxCliques mc(n, std::move(adj));
  mc.run();

  UniformResult out;
  out.r = r;
  out.t = t;
  out.optimum = static_cast<int>(mc.best_size());
  const SetFamily star = construct_uniform_star(r, t);
  const SetFamily simplex = construct_uniform_simplex(t, r);
  const SetFamily star_canon = canonical_set_family(star);
  const SetFamily simplex_canon = canonical_set_family(simplex);
  out.all_star_or_simplex = true;
  for (const auto& clique : mc.best()) {
    std::vector<CoordSet> members;
    for (std::size_t i : clique) members.push_back(sets[i]);
    SetFamily h(r, std::move(members));
    const SetFamily canon = canonical_set_family(h);
    if (canon == star_canon) ++out.star_count;
    else if (canon == simplex_canon) ++out.simplex_count;
    else out.all_star_or_simplex = false;
    out.maximum_families.push_back(std::move(h));
  }
  return out;
}

}  // namespace partex
