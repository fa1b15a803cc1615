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

#include "pathcolor/protocols.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "brute_force.hpp"

namespace pathcolor {
namespace {

ColorState state(std::vector<Color> colors, Color c) { return ColorState(std::move(colors), c); }

const ProtocolSpec kEdge = parse_protocol("C|phi");
const ProtocolSpec kCenter = parse_protocol("phi|C");
const ProtocolSpec kSuboptimal = parse_protocol("Cbar|CbarX");

std::vector<ColorState> all_states(int n, int c) {
  std::vector<ColorState> out;
  const auto total = testing::power(c, n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Color> colors;
    for (int v : testing::state_from_index(idx, n, c)) colors.push_back(static_cast<Color>(v) + 1);
    out.emplace_back(colors, static_cast<Color>(c));
  }
  return out;
}

TEST(EnumerateProtocolsTest, ThirtyTwoDistinctNames) {
  const auto all = enumerate_protocols();
  ASSERT_EQ(all.size(), 32u);
  std::set<std::string> names;
  std::set<std::string> aliases;
  for (const auto& p : all) {
    names.insert(p.name());
    aliases.insert(p.alias());
    EXPECT_EQ(parse_protocol(p.alias()), p);
    EXPECT_EQ(parse_protocol(p.name()), p);
    EXPECT_EQ(parse_protocol(std::to_string(p.mask())), p);
  }
  EXPECT_EQ(names.size(), 32u);
  EXPECT_EQ(aliases.size(), 32u);
  EXPECT_TRUE(names.contains("(C,φ)"));
  EXPECT_TRUE(names.contains("(φ,C)"));
  EXPECT_TRUE(names.contains("(C̄,C̄X)"));
  EXPECT_TRUE(names.contains("(C,CX)"));
}

TEST(ParseProtocolTest, AliasesAndMasks) {
  EXPECT_EQ(kEdge.mask(), 0b00001u);
  EXPECT_EQ(kCenter.mask(), 0b00100u);
  EXPECT_EQ(kSuboptimal.mask(), 0b11010u);
  EXPECT_EQ(kSuboptimal.alias(), "Cbar|CbarX");
  EXPECT_EQ(parse_protocol("random"), ProtocolSpec(0));
  EXPECT_EQ(parse_protocol("0b11010"), kSuboptimal);
  EXPECT_EQ(parse_protocol("26"), kSuboptimal);
  EXPECT_EQ(parse_protocol("(C,CX)"), ProtocolSpec(0b10101));
}

TEST(ParseProtocolTest, Rejects) {
  EXPECT_THROW(parse_protocol("X|phi"), std::invalid_argument);
  EXPECT_THROW(parse_protocol("C|CC"), std::invalid_argument);
  EXPECT_THROW(parse_protocol("32"), std::invalid_argument);
  EXPECT_THROW(parse_protocol("0b100000"), std::invalid_argument);
  EXPECT_THROW(parse_protocol("bogus"), std::invalid_argument);
  EXPECT_THROW(parse_protocol("C|Y"), std::invalid_argument);
}

LocalView view(Color root, std::vector<Color> leaves) {
  LocalView v{root, {}};
  for (Color c : leaves) v.children.push_back({c, {}});
  return v;
}

TEST(DecideTest, Examples) {
  EXPECT_EQ(decide(kEdge, view(1, {1})), Decision::kRedraw);
  EXPECT_EQ(decide(kCenter, view(1, {1})), Decision::kKeep);
  EXPECT_EQ(decide(kSuboptimal, view(1, {1, 2})), Decision::kRedraw);
  EXPECT_EQ(decide(kSuboptimal, view(1, {1, 1})), Decision::kKeep);
  EXPECT_EQ(decide(kCenter, view(2, {2, 2})), Decision::kRedraw);
}

TEST(DecideTest, RejectsNonPathViews) {
  EXPECT_THROW(decide(kEdge, view(1, {})), std::invalid_argument);
  EXPECT_THROW(decide(kEdge, view(1, {1, 1, 1})), std::invalid_argument);
}

TEST(ExecuteTest, CenterCorrectingOnP4) {
  const auto out = execute_with_draws(build_path(4), state({1, 1, 1, 1}, 2), kCenter, std::vector<std::uint64_t>{0, 0});
  EXPECT_EQ(out.final_state, state({1, 2, 2, 1}, 2));
  EXPECT_EQ(out.changed, (std::vector<NodeIndex>{1, 2}));
  EXPECT_EQ(count_defects(build_path(4), out.final_state), 1u);
}

TEST(ExecuteTest, CenterCorrectingShrinksInteriorGroup) {
  CounterRng rng(1, 2);
  const auto g = build_path(5);
  const auto out = execute(g, state({2, 1, 1, 1, 2}, 2), kCenter, rng);
  EXPECT_EQ(out.final_state, state({2, 1, 2, 1, 2}, 2));
  EXPECT_EQ(count_defects(g, out.final_state), 0u);
}

TEST(ExecuteTest, ProperColoringUntouchedByConflictOnlyProtocol) {
  CounterRng rng(3, 4);
  const auto out = execute(build_path(3), state({1, 2, 1}, 2), parse_protocol("C|C"), rng);
  EXPECT_EQ(out.final_state, state({1, 2, 1}, 2));
  EXPECT_TRUE(out.changed.empty());
}

TEST(ExecuteTest, Preconditions) {
  CounterRng rng(0, 0);
  EXPECT_THROW(execute(build_path(3), state({1, 1, 1}, 1), kEdge, rng), std::invalid_argument);
  EXPECT_THROW(execute(build_path(1), state({1}, 2), kEdge, rng), std::invalid_argument);
  const FlowGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_THROW(execute(triangle, state({1, 1, 1}, 2), kEdge, rng), std::invalid_argument);
  EXPECT_THROW(execute_with_draws(build_path(3), state({1, 1, 1}, 3), kCenter, std::vector<std::uint64_t>{2}),
               std::invalid_argument);
}

TEST(ExecuteTest, TwoNodePathHasTwoDegreeOneNodes) {
  CounterRng rng(0, 0);
  const auto out = execute(build_path(2), state({1, 1}, 2), kEdge, rng);
  EXPECT_EQ(out.final_state, state({2, 2}, 2));
  EXPECT_EQ(out.changed, (std::vector<NodeIndex>{0, 1}));
}

TEST(ExecuteAllOutcomesTest, DeterministicAtTwoColors) {
  const auto outs = execute_all_outcomes(build_path(5), state({1, 1, 2, 2, 2}, 2), kSuboptimal);
  ASSERT_EQ(outs.size(), 1u);
  EXPECT_EQ(outs[0].probability, 1);
}

TEST(ExecuteAllOutcomesTest, FourWaysOnP4WithThreeColors) {
  const auto g = build_path(4);
  const auto outs = execute_all_outcomes(g, state({1, 1, 1, 1}, 3), kCenter);
  ASSERT_EQ(outs.size(), 4u);
  Rational total = 0;
  Rational expected = 0;
  for (const auto& [o, p] : outs) {
    EXPECT_EQ(p, Rational(1, 4));
    total += p;
    expected += p * count_defects(g, o.final_state);
  }
  EXPECT_EQ(total, 1);
  EXPECT_EQ(expected, Rational(1, 2));
}

TEST(ExecuteAllOutcomesTest, CapIsEnforced) {
  const auto s = state(std::vector<Color>(12, 1), 3);
  EXPECT_THROW(execute_all_outcomes(build_path(12), s, kCenter, 1000), std::length_error);
  EXPECT_EQ(execute_all_outcomes(build_path(12), s, kCenter, 1024).size(), 1024u);
}

// The fast path and the message-passing path pick the same re-drawing nodes
// for every protocol and every start.
TEST(RedrawingNodesTest, FastPathMatchesViews) {
  for (int n : {2, 3, 4, 5}) {
    const auto g = build_path(n);
    for (const auto& s : all_states(n, 3)) {
      for (const auto spec : enumerate_protocols()) {
        ASSERT_EQ(redrawing_nodes(g, s, spec), redrawing_nodes_via_views(g, s, spec))
            << spec.alias() << " " << format_state(s);
      }
    }
  }
}

TEST(ExecuteTest, ChangedNodesDifferAndOthersKeepTheirColor) {
  const auto g = build_path(7);
  for (const auto spec : enumerate_protocols()) {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
      CounterRng rng(11, trial);
      std::vector<Color> colors(7);
      for (auto& col : colors) col = static_cast<Color>(rng.uniform(4)) + 1;
      const ColorState s0(colors, 4);
      const auto out = execute(g, s0, spec, rng);
      for (NodeIndex v = 0; v < 7; ++v) {
        const bool changed = std::find(out.changed.begin(), out.changed.end(), v) != out.changed.end();
        if (changed) {
          EXPECT_NE(out.final_state[v], s0[v]);
        } else {
          EXPECT_EQ(out.final_state[v], s0[v]);
        }
      }
    }
  }
}

TEST(ExecuteTest, MirrorSymmetry) {
  const auto g = build_path(6);
  for (const auto& s : all_states(6, 3)) {
    std::vector<Color> rev(s.colors().rbegin(), s.colors().rend());
    const ColorState r(rev, 3);
    for (const auto spec : enumerate_protocols()) {
      const auto nodes = redrawing_nodes(g, s, spec);
      std::vector<NodeIndex> mirrored;
      for (auto v : redrawing_nodes(g, r, spec)) mirrored.push_back(5 - v);
      std::sort(mirrored.begin(), mirrored.end());
      ASSERT_EQ(nodes, mirrored);
      // Fix each redrawing node's target; the mirrored run gets the draws in
      // reversed order.
      std::vector<std::uint64_t> draws(nodes.size());
      for (std::size_t k = 0; k < draws.size(); ++k) draws[k] = (k * 7 + s[0]) % 2;
      std::vector<std::uint64_t> rdraws(draws.rbegin(), draws.rend());
      const auto a = execute_with_draws(g, s, spec, draws).final_state;
      const auto b = execute_with_draws(g, r, spec, rdraws).final_state;
      std::vector<Color> back(b.colors().rbegin(), b.colors().rend());
      ASSERT_EQ(a, ColorState(back, 3));
    }
  }
}

// Relabelling the palette commutes with execution when each redrawing node's
// target color is relabelled the same way.
TEST(ExecuteTest, PalettePermutationEquivariance) {
  const auto g = build_path(5);
  const std::vector<Color> pi{0, 2, 3, 1};  // 1->2, 2->3, 3->1
  for (const auto& s : all_states(5, 3)) {
    std::vector<Color> permuted;
    for (Color col : s.colors()) permuted.push_back(pi[col]);
    const ColorState p(permuted, 3);
    for (const auto spec : enumerate_protocols()) {
      const auto outcomes = execute_all_outcomes(g, s, spec);
      const auto permuted_outcomes = execute_all_outcomes(g, p, spec);
      std::multiset<std::vector<Color>> expected;
      for (const auto& o : outcomes) {
        std::vector<Color> f;
        for (Color col : o.outcome.final_state.colors()) f.push_back(pi[col]);
        expected.insert(f);
      }
      std::multiset<std::vector<Color>> actual;
      for (const auto& o : permuted_outcomes) {
        actual.emplace(o.outcome.final_state.colors().begin(), o.outcome.final_state.colors().end());
      }
      ASSERT_EQ(expected, actual) << spec.alias() << " " << format_state(s);
    }
  }
}

TEST(ExecuteTest, TwoColorsAreDeterministic) {
  const auto g = build_path(6);
  for (const auto& s : all_states(6, 2)) {
    for (const auto spec : enumerate_protocols()) {
      CounterRng rng(5, 5);
      const auto single = execute(g, s, spec, rng);
      const auto all = execute_all_outcomes(g, s, spec);
      ASSERT_EQ(all.size(), 1u);
      ASSERT_EQ(all[0].outcome.final_state, single.final_state);
    }
  }
}

TEST(ExecuteTest, EdgeCorrectingClearsBoundaryEdges) {
  const auto g = build_path(6);
  for (const auto& s : all_states(6, 3)) {
    for (const auto& [o, p] : execute_all_outcomes(g, s, kEdge)) {
      EXPECT_NE(o.final_state[0], o.final_state[1]);
      EXPECT_NE(o.final_state[4], o.final_state[5]);
    }
  }
}

TEST(ExecuteTest, CenterCorrectingShrinksGroupsByTwoAtTwoColors) {
  const auto g = build_path(9);
  for (const auto& s : all_states(9, 2)) {
    const auto before = run_groups(s.colors());
    CounterRng rng(0, 0);
    const auto after = execute(g, s, kCenter, rng).final_state;
    std::vector<std::size_t> expected;
    for (const auto& grp : before.groups) {
      if (grp.length >= 3) {
        expected.insert(expected.end(), {1, grp.length - 2, 1});
      } else {
        expected.push_back(grp.length);
      }
    }
    ASSERT_EQ(run_groups(after.colors()).sizes(), expected) << format_state(s);
  }
}

}  // namespace
}  // namespace pathcolor
