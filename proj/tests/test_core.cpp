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
#include <sstream>

#include "partex/error.hpp"
#include "partex/family.hpp"
#include "partex/family_io.hpp"
#include "partex/set_family.hpp"
#include "support/oracles.hpp"

using namespace partex;

TEST(part_spec, counts) {
  PartSpec spec({4, 3, 2});
  EXPECT_EQ(spec.r(), 3);
  EXPECT_EQ(spec.vector_count(), 24u);
  EXPECT_EQ(spec.vertex_count(), 9);
  EXPECT_EQ(spec.min_size(), 2);
  EXPECT_FALSE(spec.is_uniform());
  EXPECT_TRUE(PartSpec::uniform(4, 3).is_uniform());
  EXPECT_EQ(PartSpec::uniform(4, 3).vector_count(), 81u);
}

TEST(part_spec, rejects_bad_sizes) {
  EXPECT_THROW(PartSpec({3}), InvalidArgument);
  EXPECT_THROW(PartSpec({3, 0}), InvalidArgument);
  EXPECT_THROW(PartSpec({3, 1}), InvalidArgument);
  EXPECT_THROW(PartSpec({256, 2}), InvalidArgument);
  EXPECT_THROW(PartSpec(std::vector<int>(17, 2)), InvalidArgument);
  EXPECT_THROW(PartSpec::uniform(10, 10), BudgetExceeded);
  EXPECT_NO_THROW(PartSpec::uniform(10, 10, 10'000'000'000ULL));
}

TEST(coord_set, basics) {
  CoordSet s = CoordSet::from_parts({1, 3});
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.to_string(), "{1,3}");
  EXPECT_EQ(s.parts(), (std::vector<int>{1, 3}));
  EXPECT_TRUE(s.is_subset_of(CoordSet::full(3)));
  EXPECT_LT(CoordSet::from_parts({1, 2}), CoordSet::from_parts({1, 3}));
  EXPECT_LT(CoordSet::from_parts({1}), CoordSet::from_parts({1, 2}));
}

TEST(edge, order_and_rank) {
  PartSpec spec({3, 2, 2});
  auto all = oracle::all_vectors(spec);
  ASSERT_EQ(all.size(), 12u);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(edge_rank(spec, all[i]), i);
    EXPECT_EQ(edge_unrank(spec, i), all[i]);
    if (i) EXPECT_LT(all[i - 1], all[i]);
  }
  EXPECT_EQ(Edge({2, 1, 2}).to_string(), "(2,1,2)");
  EXPECT_THROW(validate_edge(spec, Edge({1, 3, 1})), InvalidArgument);
  EXPECT_THROW(validate_edge(spec, Edge({1, 1})), InvalidArgument);
}

TEST(family, dedup_and_sort) {
  PartSpec spec({2, 2});
  Family f = make_family(spec, {{2, 1}, {1, 2}, {2, 1}});
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], Edge({1, 2}));
  EXPECT_TRUE(f.contains(Edge({2, 1})));
  EXPECT_FALSE(f.contains(Edge({1, 1})));
  EXPECT_TRUE(f.is_subset_of(complete_family(spec)));
  EXPECT_EQ(complete_family(spec).size(), 4u);
  EXPECT_THROW(make_family(spec, {{3, 1}}), InvalidArgument);
}

TEST(family_io, round_trip_random) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<int> r_d(2, 4), n_d(2, 4);
    std::vector<int> sizes;
    int r = r_d(rng);
    for (int l = 0; l < r; ++l) sizes.push_back(n_d(rng));
    PartSpec spec(sizes);
    Family f = oracle::random_family(spec, rng, 0.4);
    std::string text = format_family(f);
    EXPECT_EQ(parse_family(text), f);
    EXPECT_EQ(format_family(parse_family(text)), text);
  }
}

TEST(family_io, canonical_text) {
  Family f = make_family(PartSpec({2, 3}), {{2, 3}, {1, 1}});
  EXPECT_EQ(format_family(f), "PARTITE 2\nSIZES 2 3\n1 1\n2 3\n");
  Family g = parse_family("# comment\nPARTITE 2\nSIZES 2 3\n2 3\n\n1 1\n2 3\n");
  EXPECT_EQ(g, f);
}

namespace {
int parse_error_line(const std::string& text) {
  try {
    parse_family(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}
}  // namespace

TEST(family_io, parse_errors_carry_line) {
  EXPECT_EQ(parse_error_line("PARTITE x\n"), 1);
  EXPECT_EQ(parse_error_line("PARTITE 2\nSIZES 2\n"), 2);
  EXPECT_EQ(parse_error_line("PARTITE 2\nSIZES 2 2\n1 1\n1 3\n"), 4);
  EXPECT_EQ(parse_error_line("PARTITE 2\nSIZES 2 2\n1 1 1\n"), 3);
  EXPECT_EQ(parse_error_line("# only a comment\n"), 2);
  EXPECT_EQ(parse_error_line("PARTITE 3\n"), 2);
  EXPECT_EQ(parse_error_line("PARTITE 2\nSIZES 2 2\n1 1\n"), -1);
}

TEST(set_family, intersection_data) {
  SetFamily tri(3, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(tri.min_pairwise_intersection(), 1);
  EXPECT_TRUE(tri.is_t_intersecting(1));
  EXPECT_TRUE(tri.common_elements().empty());
  EXPECT_TRUE(tri.is_nontrivial_t_intersecting(1));
  EXPECT_TRUE(tri.is_uniform(2));

  SetFamily star(3, {{1, 2}, {1, 3}});
  EXPECT_EQ(star.common_elements(), CoordSet::from_parts({1}));
  EXPECT_FALSE(star.is_nontrivial_t_intersecting(1));
  EXPECT_EQ(SetFamily(4).common_elements(), CoordSet::full(4));
  EXPECT_THROW(SetFamily(3, {{4}}), InvalidArgument);
}
