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
#include <istream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pathcolor {

// 0-based internally. Rendered 1-based in every user-facing format.
using NodeIndex = std::size_t;

// Degree plus the degree distribution of the node's neighbors. Two nodes are
// of the same type iff these compare equal.
struct NodeType {
  std::size_t degree = 0;
  // neighbor degree -> number of neighbors with that degree
  std::map<std::size_t, std::size_t> neighbor_degrees;

  auto operator<=>(const NodeType&) const = default;
};

std::string to_string(const NodeType& type);

// Undirected simple connected graph of interfering flows.
//
// Immutable after construction. Neighbor lists are sorted so that every
// traversal is deterministic.
class FlowGraph {
 public:
  // Throws std::invalid_argument on self-loops, duplicate edges, out of range
  // endpoints, zero nodes, or a disconnected result.
  FlowGraph(std::size_t node_count, const std::vector<std::pair<NodeIndex, NodeIndex>>& edges);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Edges as (lo, hi) pairs in lexicographic order.
  const std::set<std::pair<NodeIndex, NodeIndex>>& edges() const { return edges_; }
  const std::vector<NodeIndex>& neighbors(NodeIndex node) const;
  std::size_t degree(NodeIndex node) const { return neighbors(node).size(); }
  bool adjacent(NodeIndex a, NodeIndex b) const;

  // True iff the graph is P_n with nodes labelled 0..n-1 in path order.
  bool is_labelled_path() const;

  // Shortest-path distances from `source`; the graph is connected so every
  // entry is finite.
  std::vector<std::size_t> distances_from(NodeIndex source) const;

 private:
  void check_node(NodeIndex node) const;

  std::vector<std::vector<NodeIndex>> adjacency_;
  std::set<std::pair<NodeIndex, NodeIndex>> edges_;
};

// P_n: nodes 0..n-1, edges (i, i+1). Rejects n == 0.
FlowGraph build_path(std::size_t n);

// Nodes at shortest-path distance exactly r (r == 0 gives {node}).
std::set<NodeIndex> r_hop_neighbors(const FlowGraph& g, NodeIndex node, std::size_t r);

NodeType node_type(const FlowGraph& g, NodeIndex node);

std::size_t diameter(const FlowGraph& g);

// Text format:
//   n <count>
//   e <i> <j>      (1-based, one edge per line)
// Blank lines and lines starting with '#' are ignored.
FlowGraph parse_graph(std::istream& in);
std::string format_graph(const FlowGraph& g);

}  // namespace pathcolor
