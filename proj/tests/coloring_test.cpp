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

#include "pathcolor/coloring.hpp"

#include <numeric>

#include <gtest/gtest.h>

#include "brute_force.hpp"

namespace pathcolor {
namespace {

ColorState state(std::vector<Color> colors, Color c) { return ColorState(std::move(colors), c); }

TEST(ColorStateTest, RangeChecked) {
  EXPECT_THROW(state({1, 3}, 2), std::invalid_argument);
  EXPECT_THROW(state({0, 1}, 2), std::invalid_argument);
  EXPECT_THROW(state({1}, 0), std::invalid_argument);
  EXPECT_NO_THROW(state({1, 1, 1}, 1));
}

TEST(ColorStateTest, TextFormat) {
  const auto s = parse_state("1, 2,3", 3);
  EXPECT_EQ(s, state({1, 2, 3}, 3));
  EXPECT_EQ(format_state(s), "1,2,3");
  EXPECT_THROW(parse_state("1,,2", 3), std::invalid_argument);
  EXPECT_THROW(parse_state("1,x", 3), std::invalid_argument);
  EXPECT_THROW(parse_state("1,4", 3), std::invalid_argument);
}

TEST(ConflictStateTest, Examples) {
  const auto p3 = build_path(3);
  const auto xxy = state({1, 1, 2}, 2);
  EXPECT_EQ(conflict_state(p3, xxy, 0), ConflictState::kConflict);
  EXPECT_EQ(conflict_state(p3, xxy, 1), ConflictState::kConfused);
  EXPECT_EQ(conflict_state(p3, state({1, 2, 1}, 2), 1), ConflictState::kNoConflict);
}

TEST(ConflictStateTest, IsolatedNodeRejected) {
  EXPECT_THROW(conflict_state(build_path(1), state({1}, 2), 0), std::invalid_argument);
}

TEST(ConflictStateTest, DegreeOneNeverConfused) {
  const auto g = build_path(5);
  for (std::uint64_t idx = 0; idx < 243; ++idx) {
    const auto raw = testing::state_from_index(idx, 5, 3);
    std::vector<Color> colors(raw.begin(), raw.end());
    for (auto& col : colors) ++col;
    const ColorState s(colors, 3);
    EXPECT_NE(conflict_state(g, s, 0), ConflictState::kConfused);
    EXPECT_NE(conflict_state(g, s, 4), ConflictState::kConfused);
  }
}

TEST(CountDefectsTest, Examples) {
  const auto p3 = build_path(3);
  EXPECT_EQ(count_defects(p3, state({1, 2, 1}, 2)), 0u);
  EXPECT_EQ(count_defects(p3, state({1, 1, 1}, 2)), 2u);
  EXPECT_EQ(count_defects(build_path(5), state({1, 1, 2, 2, 2}, 2)), 3u);
}

TEST(DefectGroupsTest, Examples) {
  const auto g = defect_groups(build_path(5), state({1, 1, 2, 1, 1}, 2));
  EXPECT_EQ(g.groups, (std::vector<DefectGroup>{{0, 2, 1}, {2, 1, 2}, {3, 2, 1}}));
  EXPECT_EQ(defect_groups(build_path(4), state({1, 1, 1, 1}, 2)).sizes(), (std::vector<std::size_t>{4}));
  EXPECT_EQ(defect_groups(build_path(6), state({1, 2, 1, 2, 1, 2}, 2)).sizes(),
            std::vector<std::size_t>(6, 1));
}

TEST(DefectGroupsTest, NonPathRejected) {
  const FlowGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_THROW(defect_groups(triangle, state({1, 1, 2}, 2)), std::invalid_argument);
}

// Every state of P_6 with 3 colors: group decomposition, defect count and
// conflict states agree with each other, and conflict states ignore palette
// relabelling.
TEST(ColoringPropertyTest, ExhaustiveP6) {
  const auto g = build_path(6);
  const std::vector<Color> perm{0, 3, 1, 2};  // 1->3, 2->1, 3->2
  for (std::uint64_t idx = 0; idx < 729; ++idx) {
    const auto raw = testing::state_from_index(idx, 6, 3);
    std::vector<Color> colors;
    std::vector<Color> permuted;
    for (int v : raw) {
      colors.push_back(static_cast<Color>(v) + 1);
      permuted.push_back(perm[v + 1]);
    }
    const ColorState s(colors, 3);
    const ColorState p(permuted, 3);
    const auto dec = defect_groups(g, s);
    EXPECT_EQ(dec.defects(), count_defects(g, s));
    const auto sizes = dec.sizes();
    EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}), 6u);
    for (std::size_t k = 1; k < dec.groups.size(); ++k) {
      EXPECT_NE(dec.groups[k].color, dec.groups[k - 1].color);
    }
    bool all_free = true;
    for (NodeIndex v = 0; v < 6; ++v) {
      all_free &= conflict_state(g, s, v) == ConflictState::kNoConflict;
      EXPECT_EQ(conflict_state(g, s, v), conflict_state(g, p, v));
    }
    EXPECT_EQ(all_free, count_defects(g, s) == 0);
  }
}

}  // namespace
}  // namespace pathcolor
