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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pathcolor/coloring.hpp"
#include "pathcolor/graph.hpp"

namespace pathcolor {

// One (id, initial color, parent) record in a broadcast.
struct MessageEntry {
  NodeIndex node = 0;
  Color initial_color = 0;
  // The node the sender heard `node` from. For round 1 the sender describes
  // itself and names itself as parent.
  NodeIndex parent = 0;
};

struct RoundMessage {
  NodeIndex sender = 0;
  std::size_t round = 0;
  std::vector<MessageEntry> entries;
};

struct TreeEntry {
  NodeIndex node = 0;
  Color initial_color = 0;
  // Parent node id; nullopt only for the root.
  std::optional<NodeIndex> parent;
};

// A node's rooted view G_i^r. layers[k] holds the nodes first heard of in
// round k, each attached under a node of layers[k - 1].
struct LocalTree {
  NodeIndex root = 0;
  std::vector<std::vector<TreeEntry>> layers;
  // Reports of already-known nodes (reached over a second route). Always zero
  // on trees, paths included.
  std::size_t redundant_reports = 0;

  std::size_t depth() const { return layers.empty() ? 0 : layers.size() - 1; }
  std::vector<NodeIndex> children_of(std::size_t layer, NodeIndex node) const;
};

// Synchronous lossless broadcast: every node sends once per round. Phase one
// only records the initial colors.
std::vector<LocalTree> run_rounds(const FlowGraph& g, const ColorState& s0, std::size_t rounds);

// What node `sender` broadcasts in `round` given its tree after round - 1.
RoundMessage compose_message(const LocalTree& sender_tree, std::size_t round);

// A local tree with the ids erased. Children are kept in canonical order
// (shape first, then colors) so isomorphic views compare equal.
struct LocalView {
  Color color = 0;
  std::vector<LocalView> children;

  std::size_t depth() const;
  // Shape-only encoding, e.g. "(()())".
  std::string shape() const;
  // Colored encoding, e.g. "2(1,1)".
  std::string encode() const;

  bool operator==(const LocalView&) const = default;
};

// Orders by shape, then by colored encoding.
bool canonical_less(const LocalView& a, const LocalView& b);

LocalView anonymize(const LocalTree& tree);

}  // namespace pathcolor
