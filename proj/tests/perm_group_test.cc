// Copyright 2026 The symbreak Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.h"
#include "symbreak/coloring.h"
#include "symbreak/errors.h"
#include "symbreak/family.h"
#include "symbreak/group_action.h"
#include "symbreak/permutation_group.h"
#include "symbreak/subgroup_lattice.h"
#include "symbreak/verify.h"

namespace symbreak {
namespace {

Graph Make(const char* spec) { return make_family(ParseFamilySpec(spec)); }

TEST(PermutationTest, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 3, 1}), std::invalid_argument);
}

TEST(PermutationTest, CompositionAppliesRightFirst) {
  const Permutation p({1, 2, 0}), q({1, 0, 2});
  EXPECT_EQ((p * q).images(), (std::vector<int>{2, 1, 0}));
  EXPECT_TRUE((p * p.inverse()).is_identity());
}

TEST(PermutationTest, CycleCounts) {
  EXPECT_EQ(cycle_count(Permutation::Identity(7)), 7);
  EXPECT_EQ(cycle_count(Permutation({6, 5, 4, 3, 2, 1, 0})), 4);
  EXPECT_EQ(cycle_count(Permutation({1, 2, 3, 4, 5, 0})), 1);
}

TEST(AutomorphismTest, SpecExamples) {
  EXPECT_EQ(automorphism_group(Make("path:4")).order(), 2u);
  EXPECT_EQ(automorphism_group(Make("kneser:5,2")).order(), 120u);
  EXPECT_EQ(automorphism_group(Make("cycle:6")).order(), 12u);
}

TEST(AutomorphismTest, MatchesBruteForceOnAllGraphsUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : graph_catalog(n, false)) {
      auto expected = testing::BruteAutomorphisms(g);
      std::sort(expected.begin(), expected.end());
      const auto group = automorphism_group(g);
      std::vector<std::vector<int>> actual;
      for (const auto& p : group.elements()) actual.push_back(p.images());
      ASSERT_EQ(actual, expected) << g.label();
      ASSERT_EQ(automorphism_group_order(g), expected.size()) << g.label();
    }
  }
}

TEST(AutomorphismTest, OrderWithoutListingLargeGroups) {
  EXPECT_EQ(automorphism_group_order(Make("empty:12")), Factorial(12));
  EXPECT_EQ(automorphism_group_order(Make("biclique:5,5")), 2 * Factorial(5) * Factorial(5));
  EXPECT_EQ(automorphism_group_order(Make("kneser:7,2")), Factorial(7));
}

TEST(AutomorphismTest, ElementLimitIsEnforced) {
  SearchLimits limits;
  limits.max_elements = 100;
  EXPECT_THROW(automorphism_group(Make("complete:6"), limits), SizeBoundExceeded);
}

TEST(IsomorphismTest, CountsAndDecisions) {
  EXPECT_EQ(count_isomorphisms(Make("cycle:5"), Make("cycle:5")), 10u);
  EXPECT_EQ(count_isomorphisms(Make("cycle:5"), Make("path:5")), 0u);
  EXPECT_TRUE(are_isomorphic(Make("biclique:2,2"), Make("cycle:4")));
  EXPECT_FALSE(are_isomorphic(Make("path:4"), Make("biclique:1,3")));
}

TEST(GroupTest, GenerateClosesUnderProducts) {
  const std::vector<Permutation> gens{Permutation({1, 2, 3, 0}), Permutation({3, 2, 1, 0})};
  const auto group = PermutationGroup::Generate(4, gens);
  EXPECT_EQ(group.order(), 8u);
  for (const auto& a : group.elements()) {
    for (const auto& b : group.elements()) EXPECT_TRUE(group.contains(a * b));
  }
}

TEST(GroupTest, GeneratorsRegenerateTheGroup) {
  const auto group = automorphism_group(Make("kneser:5,2"));
  const auto again = PermutationGroup::Generate(10, group.generators());
  EXPECT_EQ(again.elements(), group.elements());
  EXPECT_LE(group.generators().size(), 7u);
}

TEST(GroupActionTest, Colorings) {
  const Permutation reversal({2, 1, 0});
  const Coloring palindrome({1, 2, 1}, 2), skew({1, 1, 2}, 2);
  EXPECT_EQ(act(Permutation::Identity(3), skew), skew);
  EXPECT_EQ(act(reversal, palindrome), palindrome);
  EXPECT_TRUE(preserves(reversal, palindrome));
  EXPECT_EQ(act(reversal, skew).colors(), (std::vector<int>{2, 1, 1}));
  EXPECT_FALSE(preserves(reversal, skew));
}

TEST(GroupActionTest, PartitionAction) {
  const Permutation rotate({1, 2, 3, 0});
  const auto moved = act(rotate, SetPartition(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(moved, SetPartition(4, {{1, 2}, {3, 0}}));
}

TEST(GroupActionTest, Orbits) {
  const std::vector<Permutation> reversal{Permutation({4, 3, 2, 1, 0})};
  EXPECT_EQ(orbits_under(reversal, 5).num_cells(), 3);
  EXPECT_EQ(orbits_under({}, 4).num_cells(), 4);
  const auto c6 = automorphism_group(Make("cycle:6"));
  EXPECT_EQ(orbits_under(c6.elements(), 6).num_cells(), 1);
}

TEST(SetPartitionTest, CanonicalForm) {
  const SetPartition p(5, {{4, 2}, {0}, {3, 1}});
  EXPECT_EQ(p.restricted_growth_string(), (std::vector<int>{0, 1, 2, 1, 2}));
  EXPECT_EQ(p.num_cells(), 3);
  EXPECT_THROW(SetPartition(3, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(SetPartition(3, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(SetPartition(2, {{0, 1}, {}}), std::invalid_argument);
}

TEST(LatticeTest, SmallGroups) {
  const auto order2 = subgroup_lattice(automorphism_group(Make("path:2")));
  EXPECT_EQ(order2.size(), 2u);
  EXPECT_EQ(order2.moebius(order2.trivial(), order2.whole()), -1);

  const auto trivial = subgroup_lattice(PermutationGroup::Trivial(3));
  EXPECT_EQ(trivial.size(), 1u);
  EXPECT_EQ(trivial.moebius(0, 0), 1);

  EXPECT_EQ(subgroup_lattice(automorphism_group(Make("cycle:4"))).size(), 10u);
}

// S_3, S_4, D_5, D_6 and S_5 have 6, 30, 8, 16 and 156 subgroups.
TEST(LatticeTest, KnownSubgroupCounts) {
  EXPECT_EQ(subgroup_lattice(automorphism_group(Make("complete:3"))).size(), 6u);
  EXPECT_EQ(subgroup_lattice(automorphism_group(Make("complete:4"))).size(), 30u);
  EXPECT_EQ(subgroup_lattice(automorphism_group(Make("cycle:5"))).size(), 8u);
  EXPECT_EQ(subgroup_lattice(automorphism_group(Make("cycle:6"))).size(), 16u);
  EXPECT_EQ(subgroup_lattice(automorphism_group(Make("complete:5"))).size(), 156u);
}

// mu(1, S_3) = 3, mu(1, S_4) = -12, and each row sums to zero below the top.
TEST(LatticeTest, MoebiusValues) {
  const auto s3 = subgroup_lattice(automorphism_group(Make("complete:3")));
  EXPECT_EQ(s3.moebius(s3.trivial(), s3.whole()), 3);
  const auto s4 = subgroup_lattice(automorphism_group(Make("complete:4")));
  EXPECT_EQ(s4.moebius(s4.trivial(), s4.whole()), -12);
  for (std::size_t h = 0; h < s4.size(); ++h) {
    const auto row = s4.moebius_row(h);
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < s4.size(); ++k) {
      if (s4.is_subgroup(h, k)) sum += row[k];
    }
    EXPECT_EQ(sum, h == s4.whole() ? 1 : 0) << "h=" << h;
  }
}

TEST(LatticeTest, OrderingAndOrbits) {
  const auto lattice = subgroup_lattice(automorphism_group(Make("cycle:6")));
  EXPECT_EQ(lattice.order_of(lattice.trivial()), 1u);
  EXPECT_EQ(lattice.order_of(lattice.whole()), 12u);
  EXPECT_EQ(lattice.orbit_count(lattice.trivial()), 6);
  EXPECT_EQ(lattice.orbit_count(lattice.whole()), 1);
  for (std::size_t h = 0; h < lattice.size(); ++h) {
    EXPECT_EQ(lattice.group().order() % lattice.order_of(h), 0u);
    EXPECT_TRUE(lattice.is_subgroup(lattice.trivial(), h));
    EXPECT_TRUE(lattice.is_subgroup(h, lattice.whole()));
  }
}

TEST(LatticeTest, GroupOrderLimit) {
  LatticeLimits limits;
  limits.max_group_order = 100;
  EXPECT_THROW(subgroup_lattice(automorphism_group(Make("complete:5")), limits),
               SizeBoundExceeded);
}

}  // namespace
}  // namespace symbreak
