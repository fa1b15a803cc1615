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

#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace pathcolor {

ColorState::ColorState(std::vector<Color> colors, Color palette_size)
    : colors_(std::move(colors)), palette_size_(palette_size) {
  if (palette_size_ == 0) throw std::invalid_argument("palette size must be at least 1");
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] < 1 || colors_[i] > palette_size_) {
      throw std::invalid_argument(fmt::format("node {} has color {} outside 1..{}", i + 1,
                                              colors_[i], palette_size_));
    }
  }
}

ColorState ColorState::with(NodeIndex i, Color color) const {
  auto copy = colors_;
  copy.at(i) = color;
  return ColorState(std::move(copy), palette_size_);
}

std::string format_state(const ColorState& s) {
  return fmt::format("{}", fmt::join(s.colors(), ","));
}

ColorState parse_state(std::string_view text, Color palette_size) {
  std::vector<Color> colors;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    Color value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw std::invalid_argument(fmt::format("bad color '{}' in state '{}'", field, text));
    }
    colors.push_back(value);
    pos = comma + 1;
  }
  return ColorState(std::move(colors), palette_size);
}

std::string_view symbol(ConflictState state) {
  switch (state) {
    case ConflictState::kConflict: return "C";
    case ConflictState::kNoConflict: return "Cbar";
    case ConflictState::kConfused: return "X";
  }
  return "?";
}

ConflictState classify(Color own, std::span<const Color> neighbor_colors) {
  std::size_t same = 0;
  for (Color c : neighbor_colors) same += (c == own);
  if (same == neighbor_colors.size()) return ConflictState::kConflict;
  if (same == 0) return ConflictState::kNoConflict;
  return ConflictState::kConfused;
}

ConflictState conflict_state(const FlowGraph& g, const ColorState& s, NodeIndex node) {
  const auto& nbrs = g.neighbors(node);
  if (nbrs.empty()) {
    throw std::invalid_argument(
        fmt::format("node {} is isolated; its conflict state is undefined", node + 1));
  }
  std::vector<Color> colors;
  colors.reserve(nbrs.size());
  for (NodeIndex v : nbrs) colors.push_back(s[v]);
  return classify(s[node], colors);
}

std::size_t count_defects(const FlowGraph& g, const ColorState& s) {
  std::size_t defects = 0;
  for (auto [a, b] : g.edges()) defects += (s[a] == s[b]);
  return defects;
}

std::size_t count_path_defects(std::span<const Color> colors) {
  std::size_t defects = 0;
  for (std::size_t i = 1; i < colors.size(); ++i) defects += (colors[i] == colors[i - 1]);
  return defects;
}

std::size_t DefectGroupDecomposition::defects() const {
  std::size_t total = 0;
  for (const auto& g : groups) total += g.length - 1;
  return total;
}

std::vector<std::size_t> DefectGroupDecomposition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(g.length);
  return out;
}

DefectGroupDecomposition run_groups(std::span<const Color> colors) {
  DefectGroupDecomposition out;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i == 0 || colors[i] != colors[i - 1]) {
      out.groups.push_back({i, 1, colors[i]});
    } else {
      ++out.groups.back().length;
    }
  }
  return out;
}

DefectGroupDecomposition defect_groups(const FlowGraph& g, const ColorState& s) {
  if (!g.is_labelled_path()) {
    throw std::invalid_argument("defect groups are defined for path graphs only");
  }
  if (s.size() != g.node_count()) {
    throw std::invalid_argument(
        fmt::format("state has {} colors for {} nodes", s.size(), g.node_count()));
  }
  return run_groups(s.colors());
}

}  // namespace pathcolor
