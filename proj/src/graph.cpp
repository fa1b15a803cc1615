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

#include "pathcolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace pathcolor {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

}  // namespace

std::string to_string(const NodeType& type) {
  std::string out = fmt::format("deg{} {{", type.degree);
  bool first = true;
  for (const auto& [deg, count] : type.neighbor_degrees) {
    out += fmt::format("{}{}:{}", first ? "" : ",", deg, count);
    first = false;
  }
  return out + "}";
}

FlowGraph::FlowGraph(std::size_t node_count,
                     const std::vector<std::pair<NodeIndex, NodeIndex>>& edges)
    : adjacency_(node_count) {
  if (node_count == 0) throw std::invalid_argument("graph must have at least one node");
  for (auto [a, b] : edges) {
    if (a >= node_count || b >= node_count) {
      throw std::invalid_argument(
          fmt::format("edge ({}, {}) references a node outside 1..{}", a + 1, b + 1, node_count));
    }
    if (a == b) throw std::invalid_argument(fmt::format("self-loop at node {}", a + 1));
    const auto key = std::minmax(a, b);
    if (!edges_.insert(key).second) {
      throw std::invalid_argument(fmt::format("duplicate edge ({}, {})", a + 1, b + 1));
    }
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  const auto dist = distances_from(0);
  const auto it = std::find(dist.begin(), dist.end(), kUnreached);
  if (it != dist.end()) {
    throw std::invalid_argument(
        fmt::format("graph is disconnected: node {} unreachable from node 1", it - dist.begin() + 1));
  }
}

void FlowGraph::check_node(NodeIndex node) const {
  if (node >= adjacency_.size()) {
    throw std::out_of_range(
        fmt::format("node {} out of range 1..{}", node + 1, adjacency_.size()));
  }
}

const std::vector<NodeIndex>& FlowGraph::neighbors(NodeIndex node) const {
  check_node(node);
  return adjacency_[node];
}

bool FlowGraph::adjacent(NodeIndex a, NodeIndex b) const {
  check_node(a);
  check_node(b);
  return edges_.contains(std::minmax(a, b));
}

bool FlowGraph::is_labelled_path() const {
  const std::size_t n = node_count();
  if (edges_.size() != n - 1) return false;
  for (NodeIndex i = 0; i + 1 < n; ++i) {
    if (!edges_.contains({i, i + 1})) return false;
  }
  return true;
}

std::vector<std::size_t> FlowGraph::distances_from(NodeIndex source) const {
  check_node(source);
  std::vector<std::size_t> dist(adjacency_.size(), kUnreached);
  std::deque<NodeIndex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeIndex u = queue.front();
    queue.pop_front();
    for (NodeIndex v : adjacency_[u]) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

FlowGraph build_path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path length must be at least 1");
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  edges.reserve(n - 1);
  for (NodeIndex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return FlowGraph(n, edges);
}

std::set<NodeIndex> r_hop_neighbors(const FlowGraph& g, NodeIndex node, std::size_t r) {
  const auto dist = g.distances_from(node);
  std::set<NodeIndex> out;
  for (NodeIndex v = 0; v < dist.size(); ++v) {
    if (dist[v] == r) out.insert(v);
  }
  return out;
}

NodeType node_type(const FlowGraph& g, NodeIndex node) {
  NodeType type;
  const auto& nbrs = g.neighbors(node);
  type.degree = nbrs.size();
  for (NodeIndex v : nbrs) ++type.neighbor_degrees[g.degree(v)];
  return type;
}

std::size_t diameter(const FlowGraph& g) {
  std::size_t best = 0;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const auto dist = g.distances_from(v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

FlowGraph parse_graph(std::istream& in) {
  std::size_t n = 0;
  bool have_header = false;
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag.front() == '#') continue;
    if (tag == "n") {
      if (have_header) throw std::invalid_argument(fmt::format("line {}: repeated 'n' header", line_no));
      if (!(ls >> n)) throw std::invalid_argument(fmt::format("line {}: expected 'n <count>'", line_no));
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) {
        throw std::invalid_argument(fmt::format("line {}: edge before 'n' header", line_no));
      }
      long long a = 0, b = 0;
      if (!(ls >> a >> b) || a < 1 || b < 1) {
        throw std::invalid_argument(fmt::format("line {}: expected 'e <i> <j>' with 1-based ids", line_no));
      }
      edges.emplace_back(static_cast<NodeIndex>(a - 1), static_cast<NodeIndex>(b - 1));
    } else {
      throw std::invalid_argument(fmt::format("line {}: unknown record '{}'", line_no, tag));
    }
  }
  if (!have_header) throw std::invalid_argument("missing 'n <count>' header");
  return FlowGraph(n, edges);
}

std::string format_graph(const FlowGraph& g) {
  std::string out = fmt::format("n {}\n", g.node_count());
  for (auto [a, b] : g.edges()) out += fmt::format("e {} {}\n", a + 1, b + 1);
  return out;
}

}  // namespace pathcolor
