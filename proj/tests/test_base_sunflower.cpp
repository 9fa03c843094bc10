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

#include <functional>
#include <random>

#include "partex/base_sunflower.hpp"
#include "partex/constructions.hpp"
#include "partex/error.hpp"
#include "partex/family_io.hpp"
#include "support/oracles.hpp"

using namespace partex;

namespace {

const GroundedSetFamily kWorked({{1, 2}, {1, 3, 4}, {1, 3, 5}, {2, 3}, {3, 4, 5}});

int brute_set_nu(const std::vector<VertexSet>& sets) {
  int best = 0;
  std::vector<const VertexSet*> pick;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    best = std::max(best, static_cast<int>(pick.size()));
    for (std::size_t i = from; i < sets.size(); ++i) {
      bool ok = true;
      for (auto* p : pick) ok = ok && are_disjoint(*p, sets[i]);
      if (!ok) continue;
      pick.push_back(&sets[i]);
      go(i + 1);
      pick.pop_back();
    }
  };
  go(0);
  return best;
}

VertexSet meet(const VertexSet& a, const VertexSet& b) {
  VertexSet c;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
  return c;
}

// Some k members whose pairwise intersections all coincide.
bool brute_has_sunflower(const std::vector<VertexSet>& sets, int k) {
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, const VertexSet*)> go = [&](std::size_t from, const VertexSet* core) -> bool {
    if (static_cast<int>(pick.size()) == k) return true;
    for (std::size_t i = from; i < sets.size(); ++i) {
      bool ok = true;
      VertexSet first;
      for (std::size_t j : pick) {
        VertexSet c = meet(sets[j], sets[i]);
        if (core) ok = ok && c == *core;
        else first = c;
      }
      if (!ok) continue;
      pick.push_back(i);
      bool found = pick.size() == 2 ? go(i + 1, &first) : go(i + 1, core);
      pick.pop_back();
      if (found) return true;
    }
    return false;
  };
  return go(0, nullptr);
}

GroundedSetFamily random_sets(std::mt19937_64& rng, int ground, int count, int max_size) {
  std::vector<VertexSet> sets;
  std::uniform_int_distribution<int> sz(1, max_size), v(1, ground);
  for (int i = 0; i < count; ++i) {
    VertexSet s;
    int k = sz(rng);
    for (int j = 0; j < k; ++j) s.push_back(v(rng));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sets.push_back(s);
  }
  return GroundedSetFamily(sets);
}

}  // namespace

TEST(base, worked_example_shrinks) {
  GroundedSetFamily f1 = shrink(kWorked, {1});
  EXPECT_EQ(f1.to_string(), "{{1},{2,3},{3,4,5}}");
  GroundedSetFamily f2 = shrink(f1, {3});
  EXPECT_EQ(f2.to_string(), "{{1},{3}}");
  EXPECT_EQ(set_matching_number(kWorked), 2);
  EXPECT_EQ(set_matching_number(f1), 2);
  EXPECT_FALSE(shrink_preserves_matching(f1, {4}));
  EXPECT_EQ(set_matching_number(shrink(f1, {4})), 3);
  EXPECT_THROW(shrink(f1, {6}), InvalidArgument);
  EXPECT_THROW(shrink(f1, {}), InvalidArgument);
  EXPECT_THROW(shrink(f1, {1}), InvalidArgument);
}

TEST(base, worked_example_base_and_log) {
  BaseFamily b = compute_base(kWorked);
  EXPECT_EQ(b.sets.to_string(), "{{1},{3}}");
  EXPECT_TRUE(is_base_of(b.sets, kWorked));
  EXPECT_EQ(b.provenance_json_lines(),
            "{\"core\":[1],\"replaced\":[[1,2],[1,3,4],[1,3,5]],\"nu_before\":2,\"nu_after\":2,\"accepted\":true}\n"
            "{\"core\":[2],\"replaced\":[[2,3]],\"nu_before\":2,\"nu_after\":3,\"accepted\":false}\n"
            "{\"core\":[3],\"replaced\":[[2,3],[3,4,5]],\"nu_before\":2,\"nu_after\":2,\"accepted\":true}\n");
  EXPECT_EQ(replay_provenance(kWorked, b.provenance), b.sets);
  EXPECT_EQ(b.size_distribution(), (std::vector<int>{0, 2}));
}

TEST(base, matching_number_examples) {
  EXPECT_EQ(set_matching_number(GroundedSetFamily({{1}, {2, 3}, {3, 4, 5}})), 2);
  EXPECT_EQ(set_matching_number(GroundedSetFamily({{1}, {2}, {3, 4}, {5}})), 4);
  EXPECT_EQ(set_matching_number(GroundedSetFamily()), 0);
}

TEST(base, fixpoint_is_returned_unchanged) {
  GroundedSetFamily f({{1}, {2}});
  BaseFamily b = compute_base(f);
  EXPECT_EQ(b.sets, f);
  EXPECT_TRUE(is_base_of(f, f));
}

TEST(base, random_bases_satisfy_definition) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 150; ++iter) {
    GroundedSetFamily f = random_sets(rng, 7, 6, 4);
    BaseFamily b = compute_base(f);
    EXPECT_TRUE(b.sets.is_antichain());
    EXPECT_EQ(brute_set_nu(b.sets.sets()), brute_set_nu(f.sets()));
    for (const auto& m : f) {
      bool covered = false;
      for (const auto& x : b.sets) covered = covered || is_subset(x, m);
      EXPECT_TRUE(covered);
    }
    // No further shrink keeps nu.
    for (const auto& m : b.sets)
      for (std::uint32_t mask = 1; mask + 1 < (1u << m.size()); ++mask) {
        VertexSet c;
        for (std::size_t i = 0; i < m.size(); ++i)
          if (mask >> i & 1u) c.push_back(m[i]);
        EXPECT_GT(brute_set_nu(shrink(b.sets, c).sets()), brute_set_nu(b.sets.sets()));
      }
    for (const auto& step : b.provenance) {
      if (step.accepted) EXPECT_EQ(step.nu_after, step.nu_before);
      else EXPECT_GT(step.nu_after, step.nu_before);
    }
    EXPECT_EQ(replay_provenance(f, b.provenance), b.sets);
    EXPECT_TRUE(is_base_of(b.sets, f));
  }
}

TEST(sunflower, examples) {
  auto s = find_sunflower(GroundedSetFamily({{1, 2}, {1, 3}, {1, 4}}), 3);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->core, (VertexSet{1}));
  EXPECT_EQ(s->petals.size(), 3u);
  EXPECT_TRUE(is_sunflower(*s));
  EXPECT_FALSE(find_sunflower(GroundedSetFamily({{1, 2}, {2, 3}, {1, 3}}), 3).has_value());
  auto one = find_sunflower(GroundedSetFamily({{2, 5}, {1, 4}}), 1);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->petals.size(), 1u);
  EXPECT_THROW(find_sunflower(GroundedSetFamily(std::vector<VertexSet>{{1}}), 0), InvalidArgument);
}

TEST(sunflower, erdos_rado_forced) {
  // |f| = 9 exceeds 2! (3-1)^2.
  GroundedSetFamily f({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {5, 6}, {5, 7}, {6, 7}});
  ErdosRadoReport rep = erdos_rado_check(f, 3);
  EXPECT_EQ(rep.bound, 8);
  EXPECT_TRUE(rep.bound_exceeded);
  ASSERT_TRUE(rep.sunflower.has_value());
  EXPECT_TRUE(is_sunflower(*rep.sunflower));
  EXPECT_EQ(erdos_rado_check(GroundedSetFamily(std::vector<VertexSet>{{1}}), 1).bound, 0);
}

TEST(sunflower, complete_against_brute_force) {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    int count = std::uniform_int_distribution<int>(1, 15)(rng);
    GroundedSetFamily f = random_sets(rng, 8, count, 3);
    for (int k = 1; k <= 4; ++k) {
      auto s = find_sunflower(f, k);
      ASSERT_EQ(s.has_value(), brute_has_sunflower(f.sets(), k)) << f.to_string() << " k=" << k;
      if (s) {
        EXPECT_TRUE(is_sunflower(*s));
        EXPECT_EQ(static_cast<int>(s->petals.size()), k);
        for (const auto& p : s->petals) EXPECT_TRUE(f.contains(p));
      }
    }
  }
}

TEST(partite_base, e_construction) {
  Family e = construct_E(PartSpec::uniform(3, 3), 1);
  PartiteBaseReport rep = base_of_partite_family(e, 1);
  EXPECT_EQ(rep.nu_base, 1);
  EXPECT_GT(rep.tau_base, 1);
  EXPECT_FALSE(rep.has_large_sunflower);
  EXPECT_FALSE(find_sunflower(rep.base.sets, 4).has_value());
  EXPECT_TRUE(rep.lemma_holds());
  EXPECT_TRUE(is_base_of(rep.base.sets, to_grounded(e)));
}

TEST(partite_base, star_is_rejected) {
  Family star = filter_family(complete_family(PartSpec::uniform(3, 3)), [](const Edge& x) { return x.coord(1) == 1; });
  EXPECT_THROW(base_of_partite_family(star, 1), PreconditionViolated);
}

TEST(partite_base, tagged_ids) {
  Vertex v{3, 7};
  EXPECT_EQ(tagged_vertex_id(v), 3 * 256 + 7);
  EXPECT_EQ(tagged_vertex(tagged_vertex_id(v)), v);
  GroundedSetFamily g = to_grounded(make_family(PartSpec::uniform(2, 2), {{1, 2}}));
  EXPECT_EQ(g.sets(), (std::vector<VertexSet>{{257, 514}}));
}

TEST(partite_base, random_families) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 40; ++iter) {
    int s = 1 + iter % 2;
    int n = std::uniform_int_distribution<int>(s + 1, 3)(rng);
    Family f = oracle::random_nontrivial_matching(PartSpec::uniform(3, n), s, rng);
    PartiteBaseReport rep = base_of_partite_family(f, s);
    EXPECT_TRUE(rep.lemma_holds()) << format_family(f);
    EXPECT_EQ(brute_set_nu(rep.base.sets.sets()), oracle::brute_nu(f));
    EXPECT_FALSE(brute_has_sunflower(rep.base.sets.sets(), 3 * s + 1));
  }
}
