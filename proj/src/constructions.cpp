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

#include "partex/constructions.hpp"

#include <vector>

#include "partex/analysis.hpp"
#include "partex/error.hpp"

namespace partex {
namespace {

void require_rt(int r, int t) {
  if (t < 1 || t > r - 2) {
    throw InvalidArgument("t must lie in [1, r-2] (got t=" + std::to_string(t) + ", r=" + std::to_string(r) + ")");
  }
}

void require_r3(int r) {
  if (r < 3) throw InvalidArgument("r must be >= 3 (got " + std::to_string(r) + ")");
}

std::vector<int> iota(int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

CoordSet coords(const std::vector<int>& parts) {
  CoordSet c;
  for (int p : parts) c.insert(p);
  return c;
}

}  // namespace

Family extend(const SetFamily& h, const PartSpec& spec) {
  if (h.ground_size() != spec.r()) {
    throw InvalidArgument("template ground size " + std::to_string(h.ground_size()) + " does not match r = " +
                          std::to_string(spec.r()));
  }
  std::vector<Edge> edges;
  for (std::uint64_t rank = 0; rank < spec.vector_count(); ++rank) {
    Edge e = edge_unrank(spec, rank);
    const CoordSet p = projection(e);
    for (CoordSet member : h) {
      if (member.is_subset_of(p)) {
        edges.push_back(e);
        break;
      }
    }
  }
  return make_family(spec, std::move(edges));
}

SetFamily template_W_r(int r) {
  require_r3(r);
  std::vector<CoordSet> sets;
  for (int l = 1; l < r; ++l) sets.push_back(coords({l, r}));
  sets.push_back(coords(iota(1, r - 1)));
  return SetFamily(r, std::move(sets));
}

SetFamily template_W_rt(int r, int t) {
  require_rt(r, t);
  std::vector<CoordSet> sets;
  for (int l = t + 1; l <= r; ++l) {
    auto s = iota(1, t);
    s.push_back(l);
    sets.push_back(coords(s));
  }
  for (int l = 1; l <= t; ++l) {
    CoordSet c = CoordSet::full(r);
    c.erase(l);
    sets.push_back(c);
  }
  return SetFamily(r, std::move(sets));
}

SetFamily template_K_rt(int r, int t) {
  require_rt(r, t);
  return construct_uniform_simplex(t, r);
}

Family construct_W_r(const PartSpec& spec) { return extend(template_W_r(spec.r()), spec); }

Family construct_E(const PartSpec& spec, int s, ERoute route) {
  const int r = spec.r();
  require_r3(r);
  if (!spec.is_uniform()) throw InvalidArgument("E(r,s,n) needs equal part sizes, got " + spec.to_string());
  const int n = spec.size(1);
  if (s < 1 || s >= n) {
    throw InvalidArgument("s must lie in [1, n-1] (got s=" + std::to_string(s) + ", n=" + std::to_string(n) + ")");
  }
  if (route == ERoute::kFromWr) {
    const Family w = construct_W_r(spec);
    std::vector<Edge> edges(w.begin(), w.end());
    for (std::uint64_t rank = 0; rank < spec.vector_count(); ++rank) {
      Edge e = edge_unrank(spec, rank);
      if (e.coord(r) >= 2 && e.coord(r) <= s) edges.push_back(e);
    }
    return make_family(spec, std::move(edges));
  }
  std::vector<Edge> edges;
  for (std::uint64_t rank = 0; rank < spec.vector_count(); ++rank) {
    Edge e = edge_unrank(spec, rank);
    bool head_all_ones = true;
    bool head_all_ge2 = true;
    for (int l = 1; l < r; ++l) {
      if (e.coord(l) == 1) head_all_ge2 = false;
      else head_all_ones = false;
    }
    const int last = e.coord(r);
    if (last <= s && !(head_all_ge2 && last == 1)) edges.push_back(e);
    else if (head_all_ones && last > s) edges.push_back(e);
  }
  return make_family(spec, std::move(edges));
}

Family construct_W_rt(const PartSpec& spec, int t) { return extend(template_W_rt(spec.r(), t), spec); }

Family construct_K_rt(const PartSpec& spec, int t) { return extend(template_K_rt(spec.r(), t), spec); }

SetFamily construct_uniform_star(int r, int t) {
  require_rt(r, t);
  std::vector<CoordSet> sets;
  for (int i = t + 1; i <= r; ++i) {
    auto s = iota(1, t);
    s.push_back(i);
    sets.push_back(coords(s));
  }
  return SetFamily(r, std::move(sets));
}

SetFamily construct_uniform_simplex(int t, int ground) {
  if (t < 1) throw InvalidArgument("t must be >= 1");
  if (ground == 0) ground = t + 2;
  if (ground < t + 2) throw InvalidArgument("ground set too small for the simplex");
  std::vector<CoordSet> sets;
  const CoordSet all = CoordSet::full(t + 2);
  for (int drop = 1; drop <= t + 2; ++drop) {
    CoordSet c = all;
    c.erase(drop);
    sets.push_back(c);
  }
  return SetFamily(ground, std::move(sets));
}

FormulaValue construction_formula(const std::string& name, const PartSpec& spec, int s_or_t) {
  FormulaParams p;
  p.r = spec.r();
  p.sizes.assign(spec.sizes().begin(), spec.sizes().end());
  if (name == "W_r") return formula("m0_s1", p);
  if (name == "E") {
    p.s = s_or_t;
    return formula("m0_s", p);
  }
  p.t = s_or_t;
  if (name == "W_rt") return formula("iota0_w_branch", p);
  if (name == "K_rt") return formula("iota0_k_branch", p);
  throw InvalidArgument("unknown construction '" + name + "' (expected W_r, E, W_rt or K_rt)");
}

Family construct_by_name(const std::string& name, const PartSpec& spec, int s_or_t) {
  if (name == "W_r") return construct_W_r(spec);
  if (name == "E") return construct_E(spec, s_or_t);
  if (name == "W_rt") return construct_W_rt(spec, s_or_t);
  if (name == "K_rt") return construct_K_rt(spec, s_or_t);
  throw InvalidArgument("unknown construction '" + name + "' (expected W_r, E, W_rt or K_rt)");
}

}  // namespace partex
