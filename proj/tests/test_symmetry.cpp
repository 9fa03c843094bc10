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

#include <gtest/gtest.h>

#include <random>

#include "partex/analysis.hpp"
#include "partex/constructions.hpp"
#include "partex/error.hpp"
#include "partex/family_io.hpp"
#include "partex/symmetry.hpp"
#include "support/oracles.hpp"

using namespace partex;

TEST(symmetry, identity_relabeling) {
  PartSpec spec({3, 2, 2});
  Family f = make_family(spec, {{3, 1, 2}, {1, 2, 2}});
  EXPECT_EQ(relabel(f, Relabeling::identity(spec)), f);
}

TEST(symmetry, explicit_relabeling) {
  PartSpec spec = PartSpec::uniform(2, 2);
  Relabeling g = Relabeling::identity(spec);
  g.symbol_maps[0] = {2, 1};
  g.part_order = {2, 1};
  // (1,2) -> symbols (2,2) -> parts swapped (2,2); (2,1) -> (1,1) -> (1,1).
  EXPECT_EQ(relabel(make_family(spec, {{1, 2}, {2, 1}}), g), make_family(spec, {{2, 2}, {1, 1}}));
  Relabeling bad = Relabeling::identity(spec);
  bad.symbol_maps[0] = {1, 1};
  EXPECT_THROW(relabel(make_family(spec, {{1, 1}}), bad), InvalidArgument);
  Relabeling swap_unequal = Relabeling::identity(PartSpec({3, 2}));
  swap_unequal.part_order = {2, 1};
  EXPECT_THROW(relabel(make_family(PartSpec({3, 2}), {{1, 1}}), swap_unequal), InvalidArgument);
}

TEST(symmetry, invariants_survive_relabeling) {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    PartSpec spec = iter % 2 ? PartSpec::uniform(3, 3) : PartSpec({3, 3, 2, 2});
    Family f = oracle::random_family(spec, rng, 0.3);
    Family g = relabel(f, random_relabeling(spec, rng));
    EXPECT_EQ(g.size(), f.size());
    AnalysisReport a = analyze(f), b = analyze(g);
    EXPECT_EQ(a.nu, b.nu);
    EXPECT_EQ(a.tau, b.tau);
    EXPECT_EQ(a.min_pairwise_intersection, b.min_pairwise_intersection);
    if (!f.empty()) EXPECT_EQ(a.fixed_coords->size(), b.fixed_coords->size());
  }
}

TEST(symmetry, canonical_form_is_orbit_invariant) {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 60; ++iter) {
    PartSpec spec = iter % 3 == 0 ? PartSpec({3, 2, 2}) : PartSpec::uniform(3, 3);
    Family f = oracle::random_family(spec, rng, 0.35);
    CanonicalForm c = canonical_form(f);
    EXPECT_TRUE(c.exact);
    EXPECT_EQ(c.family.size(), f.size());
    for (int k = 0; k < 3; ++k) {
      Family g = relabel(f, random_relabeling(spec, rng));
      EXPECT_EQ(canonical_form(g).family, c.family) << format_family(f);
    }
    // The canonical family is itself in the orbit, so its form is a fixpoint.
    EXPECT_EQ(canonical_form(c.family).family, c.family);
  }
}

TEST(symmetry, canonical_form_is_least) {
  // Every image under a random automorphism sorts at or above the form.
  std::mt19937_64 rng(4);
  PartSpec spec = PartSpec::uniform(3, 2);
  for (int iter = 0; iter < 30; ++iter) {
    Family f = oracle::random_family(spec, rng, 0.5);
    Family c = canonical_form(f).family;
    for (int k = 0; k < 20; ++k) {
      Family g = relabel(f, random_relabeling(spec, rng));
      std::vector<Edge> ge(g.begin(), g.end()), ce(c.begin(), c.end());
      EXPECT_LE(ce, ge);
    }
  }
}

TEST(symmetry, set_family_isomorphism) {
  SetFamily tri = construct_uniform_simplex(1, 4);
  SetFamily moved(4, {{2, 4}, {2, 3}, {3, 4}});
  EXPECT_TRUE(isomorphic(tri, moved));
  EXPECT_EQ(canonical_set_family(moved), canonical_set_family(tri));
  SetFamily path(4, {{1, 2}, {2, 3}, {3, 4}});
  EXPECT_FALSE(isomorphic(tri, path));
  EXPECT_TRUE(isomorphic(construct_uniform_star(4, 1), SetFamily(4, {{3, 1}, {3, 2}, {3, 4}})));
}
