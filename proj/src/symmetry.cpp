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

#include "partex/symmetry.hpp"

#include <algorithm>
#include <numeric>

#include "partex/error.hpp"

namespace partex {
namespace {

// Permutations of [0, r) that only move parts among equal sizes.
std::vector<std::vector<int>> part_permutations(const PartSpec& spec) {
  const int r = spec.r();
  std::vector<int> p(static_cast<std::size_t>(r));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) ok = spec.size(i + 1) == spec.size(p[static_cast<std::size_t>(i)] + 1);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

struct Scanner {
  const Family& f;
  std::vector<std::uint64_t> radix;  // place value of each new part
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> scratch;

  explicit Scanner(const Family& fam) : f(fam) {
    const int r = f.spec().r();
    radix.assign(static_cast<std::size_t>(r), 1);
    for (int i = r - 2; i >= 0; --i) {
      radix[static_cast<std::size_t>(i)] =
          radix[static_cast<std::size_t>(i + 1)] * static_cast<std::uint64_t>(f.spec().size(i + 2));
    }
  }

  // maps[l][x] is the new 0-based symbol of old symbol x+1 at old part l.
  void consider(const std::vector<int>& perm, const std::vector<std::vector<int>>& maps) {
    scratch.clear();
    const int r = f.spec().r();
    for (const Edge& e : f) {
      std::uint64_t rank = 0;
      for (int i = 0; i < r; ++i) {
        const int old = perm[static_cast<std::size_t>(i)];
        rank += radix[static_cast<std::size_t>(i)] *
                static_cast<std::uint64_t>(maps[static_cast<std::size_t>(old)][e.coord(old + 1) - 1]);
      }
      scratch.push_back(rank);
    }
    std::sort(scratch.begin(), scratch.end());
    if (best.empty() || scratch < best) best = scratch;
  }

  Family result() const {
    std::vector<Edge> edges;
    for (std::uint64_t rank : best) edges.push_back(edge_unrank(f.spec(), rank));
    return make_family(f.spec(), std::move(edges));
  }
};

}  // namespace

Relabeling Relabeling::identity(const PartSpec& spec) {
  Relabeling g;
  for (int l = 1; l <= spec.r(); ++l) {
    std::vector<int> m(static_cast<std::size_t>(spec.size(l)));
    std::iota(m.begin(), m.end(), 1);
    g.symbol_maps.push_back(std::move(m));
    g.part_order.push_back(l);
  }
  return g;
}

Family relabel(const Family& f, const Relabeling& g) {
  const PartSpec& spec = f.spec();
  const int r = spec.r();
  if (static_cast<int>(g.symbol_maps.size()) != r || static_cast<int>(g.part_order.size()) != r) {
    throw InvalidArgument("relabeling arity does not match the family");
  }
  std::vector<bool> seen(static_cast<std::size_t>(r + 1), false);
  for (int i = 1; i <= r; ++i) {
    const int old = g.part_order[static_cast<std::size_t>(i - 1)];
    if (old < 1 || old > r || seen[static_cast<std::size_t>(old)] || spec.size(old) != spec.size(i)) {
      throw InvalidArgument("part order is not a size-preserving permutation");
    }
    seen[static_cast<std::size_t>(old)] = true;
  }
  for (int l = 1; l <= r; ++l) {
    auto m = g.symbol_maps[static_cast<std::size_t>(l - 1)];
    std::sort(m.begin(), m.end());
    std::vector<int> want(static_cast<std::size_t>(spec.size(l)));
    std::iota(want.begin(), want.end(), 1);
    if (m != want) throw InvalidArgument("symbol map of part " + std::to_string(l) + " is not a bijection");
  }
  std::vector<Edge> out;
  out.reserve(f.size());
  for (const Edge& e : f) {
    Edge img = e;
    for (int i = 1; i <= r; ++i) {
      const int old = g.part_order[static_cast<std::size_t>(i - 1)];
      img.set_coord(i, g.symbol_maps[static_cast<std::size_t>(old - 1)][static_cast<std::size_t>(e.coord(old) - 1)]);
    }
    out.push_back(img);
  }
  return make_family(spec, std::move(out));
}

Relabeling random_relabeling(const PartSpec& spec, std::mt19937_64& rng) {
  Relabeling g = Relabeling::identity(spec);
  for (auto& m : g.symbol_maps) std::shuffle(m.begin(), m.end(), rng);
  const auto perms = part_permutations(spec);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  const auto& p = perms[pick(rng)];
  for (std::size_t i = 0; i < p.size(); ++i) g.part_order[i] = p[i] + 1;
  return g;
}

CanonicalForm canonical_form(const Family& f, std::uint64_t cap) {
  if (f.empty()) return CanonicalForm{f, true};
  const PartSpec& spec = f.spec();
  const int r = spec.r();

  // Only bijections from the used symbols onto the smallest labels matter:
  // composing with the order-preserving map onto [u] never makes the sorted
  // edge list larger.
  std::vector<std::vector<int>> used(static_cast<std::size_t>(r));
  for (int l = 1; l <= r; ++l) {
    std::vector<bool> u(static_cast<std::size_t>(spec.size(l) + 1), false);
    for (const Edge& e : f) u[static_cast<std::size_t>(e.coord(l))] = true;
    for (int x = 1; x <= spec.size(l); ++x)
      if (u[static_cast<std::size_t>(x)]) used[static_cast<std::size_t>(l - 1)].push_back(x);
  }
  const auto perms = part_permutations(spec);
  std::uint64_t group = perms.size();
  bool exact = true;
  for (const auto& u : used) {
    const std::uint64_t fu = factorial(static_cast<int>(u.size()));
    if (group > cap / fu) {
      exact = false;
      break;
    }
    group *= fu;
  }

  Scanner scan(f);
  std::vector<std::vector<int>> maps(static_cast<std::size_t>(r));
  for (int l = 1; l <= r; ++l) maps[static_cast<std::size_t>(l - 1)].assign(static_cast<std::size_t>(spec.size(l)), 0);

  if (!exact) {
    // Relabel each part by decreasing symbol frequency (ties by symbol).
    for (int l = 1; l <= r; ++l) {
      std::vector<int> freq(static_cast<std::size_t>(spec.size(l) + 1), 0);
      for (const Edge& e : f) ++freq[static_cast<std::size_t>(e.coord(l))];
      std::vector<int> order(static_cast<std::size_t>(spec.size(l)));
      std::iota(order.begin(), order.end(), 1);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return freq[static_cast<std::size_t>(a)] > freq[static_cast<std::size_t>(b)];
      });
      for (std::size_t k = 0; k < order.size(); ++k)
        maps[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(order[k] - 1)] = static_cast<int>(k);
    }
    for (const auto& p : perms) scan.consider(p, maps);
    return CanonicalForm{scan.result(), false};
  }

  // Odometer over per-part permutations of the used symbols.
  std::vector<std::vector<int>> images(static_cast<std::size_t>(r));
  for (int l = 0; l < r; ++l) {
    images[static_cast<std::size_t>(l)].resize(used[static_cast<std::size_t>(l)].size());
    std::iota(images[static_cast<std::size_t>(l)].begin(), images[static_cast<std::size_t>(l)].end(), 0);
  }
  while (true) {
    for (int l = 0; l < r; ++l) {
      const auto& u = used[static_cast<std::size_t>(l)];
      for (std::size_t k = 0; k < u.size(); ++k)
        maps[static_cast<std::size_t>(l)][static_cast<std::size_t>(u[k] - 1)] = images[static_cast<std::size_t>(l)][k];
    }
    for (const auto& p : perms) scan.consider(p, maps);
    int l = r - 1;
    while (l >= 0 && !std::next_permutation(images[static_cast<std::size_t>(l)].begin(),
                                            images[static_cast<std::size_t>(l)].end())) {
      --l;
    }
    if (l < 0) break;
  }
  return CanonicalForm{scan.result(), true};
}

SetFamily canonical_set_family(const SetFamily& h) {
  const int n = h.ground_size();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<CoordSet> best;
  do {
    std::vector<CoordSet> img;
    for (CoordSet s : h) {
      std::uint32_t bits = 0;
      for (int i = 0; i < n; ++i)
        if (s.contains(i + 1)) bits |= 1u << p[static_cast<std::size_t>(i)];
      img.emplace_back(bits);
    }
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  } while (std::next_permutation(p.begin(), p.end()));
  return SetFamily(n, std::move(best));
}

bool isomorphic(const SetFamily& a, const SetFamily& b) {
  return a.ground_size() == b.ground_size() && a.size() == b.size() &&
         canonical_set_family(a) == canonical_set_family(b);
}

}  // namespace partex
