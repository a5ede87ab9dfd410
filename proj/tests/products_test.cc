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

#include "symbreak/family.h"
#include "symbreak/join.h"
#include "symbreak/products.h"

namespace symbreak {
namespace {

Graph Make(const char* spec) { return make_family(ParseFamilySpec(spec)); }

TEST(NaturalityTest, CycleTimesEdge) {
  const Graph x = Make("cycle:6"), y = Make("complete:2");
  const std::vector<Graph> fibers(6, y);
  const auto analysis = naturality_check(lexicographic_product(x, y), x, fibers);
  EXPECT_EQ(analysis.natural_count, 768);
  EXPECT_EQ(analysis.full_aut_order, 768);
  EXPECT_TRUE(analysis.all_natural);
}

TEST(NaturalityTest, EdgeTimesEdgeIsUnnatural) {
  const Graph k2 = Make("complete:2");
  const std::vector<Graph> fibers(2, k2);
  const auto analysis = naturality_check(lexicographic_product(k2, k2), k2, fibers);
  EXPECT_EQ(analysis.natural_count, 8);
  EXPECT_EQ(analysis.full_aut_order, 24);
  EXPECT_FALSE(analysis.all_natural);
}

TEST(NaturalityTest, Paw) {
  const Graph x = Make("path:3"), k1 = Make("complete:1");
  const std::vector<Graph> fibers{k1, k1, Make("complete:2")};
  const auto analysis = naturality_check(x_join(x, fibers), x, fibers);
  EXPECT_EQ(analysis.natural_count, 2);
  EXPECT_TRUE(analysis.all_natural);
}

TEST(NaturalityTest, RejectsForeignGraph) {
  const Graph x = Make("path:3");
  const std::vector<Graph> fibers(3, Make("complete:1"));
  EXPECT_THROW(naturality_check(Make("cycle:3"), x, fibers), std::invalid_argument);
}

TEST(LexicographicTest, CycleTimesEdge) {
  const auto result = d_lexicographic(Make("cycle:6"), Make("complete:2"));
  EXPECT_EQ(result.value.value, 3);
  EXPECT_FALSE(result.used_fallback);
  ASSERT_TRUE(result.direct.has_value());
  EXPECT_EQ(*result.direct, 3);
}

TEST(LexicographicTest, PathTimesEdge) {
  const auto result = d_lexicographic(Make("path:4"), Make("complete:2"));
  EXPECT_EQ(result.value.value, 3);
  ASSERT_TRUE(result.direct.has_value());
  EXPECT_EQ(*result.direct, 3);
}

TEST(LexicographicTest, TimesK1IsD) {
  EXPECT_EQ(d_lexicographic(Make("path:5"), Make("complete:1")).value.value, 2);
  EXPECT_EQ(d_lexicographic(Make("cycle:6"), Make("complete:1")).value.value, 2);
}

TEST(LexicographicTest, UnnaturalFallsBack) {
  const auto result = d_lexicographic(Make("complete:2"), Make("complete:2"));
  EXPECT_TRUE(result.used_fallback);
  EXPECT_EQ(result.value.value, 4);
}

TEST(XJoinBoundTest, Paw) {
  const Graph k1 = Make("complete:1");
  const std::vector<Graph> fibers{k1, k1, Make("complete:2")};
  const auto result = d_xjoin_upper_bound(Make("path:3"), fibers);
  EXPECT_EQ(result.bound.value, 2);
  ASSERT_TRUE(result.direct.has_value());
  EXPECT_EQ(*result.direct, 2);
  for (const auto& term : result.terms) {
    for (std::size_t x = 0; x < term.class_sizes.size(); ++x) EXPECT_GE(term.class_sizes[x], 1);
  }
}

TEST(XJoinBoundTest, AllK1FibersGiveD) {
  for (const char* spec : {"path:4", "cycle:5", "cycle:7"}) {
    const Graph x = Make(spec);
    const std::vector<Graph> fibers(x.order(), Make("complete:1"));
    const auto result = d_xjoin_upper_bound(x, fibers);
    ASSERT_TRUE(result.direct.has_value());
    EXPECT_GE(result.bound.value, *result.direct) << spec;
  }
}

TEST(XJoinBoundTest, UnnaturalJoinIsRejected) {
  const Graph k2 = Make("complete:2");
  const std::vector<Graph> fibers(2, k2);
  EXPECT_THROW(d_xjoin_upper_bound(k2, fibers), std::domain_error);
}

TEST(StrictnessTest, TreesAreAsymmetricAndDistinct) {
  EXPECT_EQ(automorphism_group_order(AsymmetricTree7()), 1);
  EXPECT_EQ(automorphism_group_order(AsymmetricTree8()), 1);
  EXPECT_EQ(AsymmetricTree7().order(), 7);
  EXPECT_EQ(AsymmetricTree8().order(), 8);
}

TEST(StrictnessTest, JoinOverLargerCyclesIsAsymmetric) {
  for (int n = 5; n <= 8; ++n) {
    const auto instance = strictness_instance(n);
    const Graph z = x_join(instance.x, instance.fibers);
    EXPECT_EQ(automorphism_group_order(z), 1) << "n=" << n;
  }
}

// The bound is never below D(Z); it exceeds D(Z) = 1 from n = 6 on.
TEST(StrictnessTest, BoundDominatesDirectValue) {
  for (int n = 3; n <= 10; ++n) {
    const auto instance = strictness_instance(n);
    const auto result = d_xjoin_upper_bound(instance.x, instance.fibers);
    ASSERT_TRUE(result.direct.has_value());
    EXPECT_GE(result.bound.value, *result.direct) << "n=" << n;
    if (n >= 6) {
      EXPECT_EQ(*result.direct, 1) << "n=" << n;
      EXPECT_GT(result.bound.value, 1) << "n=" << n;
    }
  }
}

}  // namespace
}  // namespace symbreak
