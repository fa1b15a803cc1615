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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathcolor/coloring.hpp"
#include "pathcolor/exact.hpp"
#include "pathcolor/graph.hpp"
#include "pathcolor/messaging.hpp"
#include "pathcolor/rng.hpp"

namespace pathcolor {

// One of the 32 one-round path protocols, indexed by the conflict states in
// which a node re-draws its color. Degree-1 nodes can only be C or C-bar;
// degree-2 nodes can be C, C-bar or X.
//
// Mask layout (bit 0 first): deg1 C, deg1 C-bar, deg2 C, deg2 C-bar, deg2 X.
class ProtocolSpec {
 public:
  static constexpr unsigned kCount = 32;

  constexpr ProtocolSpec() = default;
  explicit constexpr ProtocolSpec(unsigned mask) : mask_(mask & 31U) {}

  static ProtocolSpec from_sets(std::span<const ConflictState> deg1_change,
                                std::span<const ConflictState> deg2_change);

  constexpr unsigned mask() const { return mask_; }

  // Throws std::invalid_argument for degree 0 or > 2, and for X at degree 1.
  bool changes(std::size_t degree, ConflictState state) const;

  // Tuple notation: "(C,φ)", "(C̄,C̄X)".
  std::string name() const;
  // ASCII alias: "C|phi", "Cbar|CbarX".
  std::string alias() const;

  constexpr bool operator==(const ProtocolSpec&) const = default;

 private:
  unsigned mask_ = 0;
};

// All 32 protocols in mask order.
std::vector<ProtocolSpec> enumerate_protocols();

// Accepts an ASCII alias ("C|phi", "phi|CX", "Cbar|CbarX"), the alias
// "random" for (φ,φ), a decimal mask 0..31 or a binary mask "0b01010".
// Throws std::invalid_argument on anything else.
ProtocolSpec parse_protocol(std::string_view text);

enum class Decision : std::uint8_t { kKeep, kRedraw };

// Decides from the root and its first layer; deeper layers are not consulted
// by one-round protocols.
Decision decide(ProtocolSpec spec, const LocalView& view);

// Nodes that re-draw under `spec`, ascending. Computed directly from the
// initial colors (phase one plus decide, without materializing views).
// Requires a labelled path with n >= 2.
std::vector<NodeIndex> redrawing_nodes(const FlowGraph& g, const ColorState& s0, ProtocolSpec spec);

// The same set obtained by running one message round, anonymizing every
// node's tree and calling decide on it.
std::vector<NodeIndex> redrawing_nodes_via_views(const FlowGraph& g, const ColorState& s0,
                                                 ProtocolSpec spec);

struct ProtocolOutcome {
  ColorState final_state;
  std::vector<NodeIndex> changed;
};

// `draws[k]` in [0, c-2] picks the replacement color of the k-th redrawing
// node (ascending): the draws[k]-th color of {1..c} minus its current color.
ColorState apply_redraws(const ColorState& s0, std::span<const NodeIndex> nodes,
                         std::span<const std::uint64_t> draws);

// One simultaneous decision round. Consumes one rng.uniform(c - 1) per
// redrawing node in ascending node order.
ProtocolOutcome execute(const FlowGraph& g, const ColorState& s0, ProtocolSpec spec, CounterRng& rng);

// As above with caller-supplied draws (one per redrawing node).
ProtocolOutcome execute_with_draws(const FlowGraph& g, const ColorState& s0, ProtocolSpec spec,
                                   std::span<const std::uint64_t> draws);

struct WeightedOutcome {
  ProtocolOutcome outcome;
  Rational probability;
};

inline constexpr std::uint64_t kDefaultOutcomeCap = 1u << 20;

// All (c-1)^k joint redraws, each with probability (c-1)^-k. Throws
// std::length_error when (c-1)^k exceeds `cap`.
std::vector<WeightedOutcome> execute_all_outcomes(const FlowGraph& g, const ColorState& s0,
                                                  ProtocolSpec spec,
                                                  std::uint64_t cap = kDefaultOutcomeCap);

}  // namespace pathcolor
