// Copyright 2026 The pathcolor Authors
//
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

#include "pathcolor/symmetry.hpp"

#include <gtest/gtest.h>

#include "brute_force.hpp"

namespace pathcolor {
namespace {

TEST(FindSymmetricPairTest, P4CentralEdge) {
  const auto pair = find_symmetric_pair(build_path(4), 1);
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(pair->i, 1u);
  EXPECT_EQ(pair->j, 2u);
  EXPECT_EQ(pair->radius, 1u);
  ASSERT_EQ(pair->layer_witness.size(), 1u);
  EXPECT_EQ(pair->layer_witness[0].first, pair->layer_witness[0].second);
}

TEST(FindSymmetricPairTest, P3HasNone) { EXPECT_FALSE(find_symmetric_pair(build_path(3), 1).has_value()); }

TEST(FindSymmetricPairTest, EvenPathsUseTheCentralEdge) {
  for (std::size_t n = 4; n <= 14; n += 2) {
    const auto g = build_path(n);
    const auto pair = find_symmetric_pair(g, n - 2);
    ASSERT_TRUE(pair.has_value()) << n;
    EXPECT_EQ(pair->i, n / 2 - 1);
    EXPECT_EQ(pair->j, n / 2);
    EXPECT_EQ(pair->radius, n - 2);
  }
}

TEST(FindSymmetricPairTest, ShortOddPathsHaveNone) {
  EXPECT_FALSE(find_symmetric_pair(build_path(5), 1).has_value());
  EXPECT_FALSE(find_symmetric_pair(build_path(5), 3).has_value());
  // Longer odd paths have 1-hop symmetric interior edges, never a full-radius one.
  const auto pair = find_symmetric_pair(build_path(9), 7);
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(pair->radius, 1u);
}

TEST(FindSymmetricPairTest, RadiusMustBeBelowDiameter) {
  EXPECT_THROW(find_symmetric_pair(build_path(4), 3), std::invalid_argument);
  EXPECT_THROW(find_symmetric_pair(build_path(4), 4), std::invalid_argument);
  EXPECT_THROW(find_symmetric_pair(build_path(4), 0), std::invalid_argument);
}

TEST(SymmetricRadiusTest, OffCenterEdgeOfP6) {
  const auto g = build_path(6);
  EXPECT_EQ(symmetric_radius(g, 2, 3, 4), 4u);
  EXPECT_EQ(symmetric_radius(g, 1, 2, 4), 0u);  // degree-1 neighbor on one side only
}

TEST(AdversarialStateTest, Examples) {
  SymmetricPair p{1, 2, 1, {}};
  EXPECT_EQ(adversarial_state(build_path(4), p, 2), ColorState({2, 1, 1, 2}, 2));
  SymmetricPair q{2, 3, 2, {}};
  EXPECT_EQ(adversarial_state(build_path(6), q, 3), ColorState({3, 2, 1, 1, 2, 3}, 3));
  EXPECT_EQ(adversarial_state(build_path(6), q, 2), ColorState({1, 2, 1, 1, 2, 1}, 2));
  EXPECT_THROW(adversarial_state(build_path(6), SymmetricPair{1, 3, 1, {}}, 2), std::invalid_argument);
}

// Probability that nodes 1 and 2 of (a, x, x, a) share a color afterwards,
// worked out by hand from who re-draws.
Rational pair_probability(unsigned mask, int c) {
  const auto rule = testing::Rule::from_mask(mask);
  const std::vector<int> s{1, 0, 0, 1};
  const bool a = testing::redraws(rule, s, 1);
  const bool b = testing::redraws(rule, s, 2);
  if (!a && !b) return 1;
  if (a != b) return 0;
  return Rational(1, c - 1);
}

TEST(ImpossibilityCheckTest, P4AllProtocols) {
  const auto g = build_path(4);
  const auto pair = *find_symmetric_pair(g, 1);
  for (Color c : {2u, 3u, 4u}) {
    const auto report = impossibility_check(g, pair, c);
    EXPECT_TRUE(report.one_round_views_equal);
    EXPECT_TRUE(report.radius_views_equal);
    ASSERT_EQ(report.rows.size(), 32u);
    for (const auto& row : report.rows) {
      EXPECT_EQ(row.decision_i, row.decision_j);
      EXPECT_EQ(row.pair_defect_probability, pair_probability(row.protocol.mask(), static_cast<int>(c)))
          << row.protocol.alias() << " c=" << c;
      EXPECT_GE(row.expected_defects, row.pair_defect_probability);
    }
    EXPECT_TRUE(report.all_defective());
  }
}

TEST(ImpossibilityCheckTest, SymmetricNodesDecideAlikeOnLongerPaths) {
  for (std::size_t n : {6u, 8u}) {
    const auto g = build_path(n);
    const auto pair = *find_symmetric_pair(g, n - 2);
    const auto report = impossibility_check(g, pair, 3);
    EXPECT_TRUE(report.radius_views_equal);
    EXPECT_TRUE(report.all_defective());
  }
}

TEST(FindDefectiveStartTest, NoProtocolIsOneRoundSuccessfulOnP4) {
  for (const auto spec : enumerate_protocols()) {
    for (Color c : {2u, 3u}) {
      const auto start = find_defective_start(build_path(4), spec, c);
      ASSERT_TRUE(start.has_value()) << spec.alias();
      const auto outs = execute_all_outcomes(build_path(4), *start, spec);
      Rational p = 0;
      for (const auto& o : outs) {
        if (count_defects(build_path(4), o.outcome.final_state) > 0) p += o.probability;
      }
      EXPECT_GT(p, 0);
    }
  }
}

}  // namespace
}  // namespace pathcolor
