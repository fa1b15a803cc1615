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

#include "pathcolor/messaging.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

namespace pathcolor {

std::vector<NodeIndex> LocalTree::children_of(std::size_t layer, NodeIndex node) const {
  std::vector<NodeIndex> out;
  if (layer + 1 >= layers.size()) return out;
  for (const auto& e : layers[layer + 1]) {
    if (e.parent == node) out.push_back(e.node);
  }
  return out;
}

RoundMessage compose_message(const LocalTree& sender_tree, std::size_t round) {
  if (round == 0 || round > sender_tree.layers.size()) {
    throw std::invalid_argument(fmt::format("cannot compose round {} from a tree of depth {}",
                                            round, sender_tree.depth()));
  }
  RoundMessage msg{sender_tree.root, round, {}};
  for (const auto& e : sender_tree.layers[round - 1]) {
    msg.entries.push_back({e.node, e.initial_color, e.parent.value_or(sender_tree.root)});
  }
  return msg;
}

std::vector<LocalTree> run_rounds(const FlowGraph& g, const ColorState& s0, std::size_t rounds) {
  if (s0.size() != g.node_count()) {
    throw std::invalid_argument(
        fmt::format("state has {} colors for {} nodes", s0.size(), g.node_count()));
  }
  const std::size_t n = g.node_count();
  std::vector<LocalTree> trees(n);
  // known[i][v]: depth at which node v entered i's tree.
  std::vector<std::map<NodeIndex, std::size_t>> known(n);
  for (NodeIndex i = 0; i < n; ++i) {
    trees[i].root = i;
    trees[i].layers.push_back({{i, s0[i], std::nullopt}});
    known[i][i] = 0;
  }

  for (std::size_t r = 1; r <= rounds; ++r) {
    // All messages of a round are composed before any is delivered.
    std::vector<RoundMessage> outbox;
    outbox.reserve(n);
    for (NodeIndex i = 0; i < n; ++i) outbox.push_back(compose_message(trees[i], r));

    for (NodeIndex i = 0; i < n; ++i) {
      std::vector<TreeEntry> layer;
      for (NodeIndex sender : g.neighbors(i)) {
        for (const auto& e : outbox[sender].entries) {
          if (known[i].contains(e.node)) {
            ++trees[i].redundant_reports;
            continue;
          }
          // Round 1 announces the sender itself, which hangs off the root.
          const NodeIndex parent = r == 1 ? i : e.parent;
          const auto it = known[i].find(parent);
          if (it == known[i].end() || it->second != r - 1) {
            // Unreachable for consistent BFS layering; kept as a hard check.
            throw std::logic_error(fmt::format(
                "node {}: parent {} of node {} is not in layer {}", i + 1, parent + 1, e.node + 1, r - 1));
          }
          known[i][e.node] = r;
          layer.push_back({e.node, e.initial_color, parent});
        }
      }
      trees[i].layers.push_back(std::move(layer));
    }
  }
  return trees;
}

std::size_t LocalView::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth() + 1);
  return d;
}

std::string LocalView::shape() const {
  std::string out = "(";
  for (const auto& c : children) out += c.shape();
  return out + ")";
}

std::string LocalView::encode() const {
  std::string out = std::to_string(color);
  if (children.empty()) return out;
  out += "(";
  for (std::size_t k = 0; k < children.size(); ++k) {
    if (k) out += ",";
    out += children[k].encode();
  }
  return out + ")";
}

bool canonical_less(const LocalView& a, const LocalView& b) {
  const auto sa = a.shape();
  const auto sb = b.shape();
  if (sa != sb) return sa < sb;
  return a.encode() < b.encode();
}

namespace {

LocalView build_view(const LocalTree& tree, std::size_t layer, NodeIndex node, Color color) {
  LocalView view{color, {}};
  if (layer + 1 < tree.layers.size()) {
    for (const auto& e : tree.layers[layer + 1]) {
      if (e.parent == node) view.children.push_back(build_view(tree, layer + 1, e.node, e.initial_color));
    }
  }
  std::sort(view.children.begin(), view.children.end(), canonical_less);
  return view;
}

}  // namespace

LocalView anonymize(const LocalTree& tree) {
  if (tree.layers.empty() || tree.layers[0].size() != 1) {
    throw std::invalid_argument("local tree must have exactly one root");
  }
  return build_view(tree, 0, tree.root, tree.layers[0][0].initial_color);
}

}  // namespace pathcolor
