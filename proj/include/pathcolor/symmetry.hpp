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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pathcolor/coloring.hpp"
#include "pathcolor/exact.hpp"
#include "pathcolor/graph.hpp"
#include "pathcolor/messaging.hpp"
#include "pathcolor/protocols.hpp"

namespace pathcolor {

// Adjacent nodes i < j whose r-hop neighbor sets carry the same multiset of
// node types for every 1 <= r <= radius.
struct SymmetricPair {
  NodeIndex i = 0;
  NodeIndex j = 0;
  std::size_t radius = 0;
  // layer_witness[r - 1] = sorted types of (i's r-hop set, j's r-hop set).
  std::vector<std::pair<std::vector<NodeType>, std::vector<NodeType>>> layer_witness;
};

// Largest symmetric radius of the edge (i, j), capped at r_max.
std::size_t symmetric_radius(const FlowGraph& g, NodeIndex i, NodeIndex j, std::size_t r_max);

// Pair with the largest radius R <= r_max (R >= 1); ties go to the
// lexicographically smallest (i, j). Requires 1 <= r_max < diameter(g) and
// throws std::invalid_argument otherwise.
std::optional<SymmetricPair> find_symmetric_pair(const FlowGraph& g, std::size_t r_max);

// Colors every node by its distance to the pair: distance 0 (i and j) gets
// color 1, distance 1 color 2, and so on modulo c. On a path this mirrors the
// coloring across the (i, j) edge.
ColorState adversarial_state(const FlowGraph& g, const SymmetricPair& pair, Color c);

struct ProtocolImpossibilityRow {
  ProtocolSpec protocol;
  Decision decision_i = Decision::kKeep;
  Decision decision_j = Decision::kKeep;
  // Probability that i and j end with the same color.
  Rational pair_defect_probability;
  Rational expected_defects;
  // Number of joint redraw outcomes enumerated.
  std::size_t outcomes = 0;
};

struct ImpossibilityReport {
  SymmetricPair pair;
  ColorState state;
  Color palette_size = 0;
  // Anonymized one-round views of i and j coincide.
  bool one_round_views_equal = false;
  // Same check at the pair's full radius.
  bool radius_views_equal = false;
  std::vector<ProtocolImpossibilityRow> rows;

  // Every protocol leaves a defect with positive probability.
  bool all_defective() const;
};

// Runs all 32 one-round protocols on the adversarial state. The graph must be
// a labelled path.
ImpossibilityReport impossibility_check(const FlowGraph& g, const SymmetricPair& pair, Color c);

// Exhaustive search over all c^n starting states for one from which `spec`
// can end with a defect. Returns nullopt iff the protocol is one-round
// successful on g with c colors.
std::optional<ColorState> find_defective_start(const FlowGraph& g, ProtocolSpec spec, Color c);

}  // namespace pathcolor
