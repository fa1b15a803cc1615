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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathcolor/graph.hpp"

namespace pathcolor {

using Color = std::uint32_t;

// A full network coloring: one color in 1..palette_size per node.
class ColorState {
 public:
  // Throws std::invalid_argument if palette_size == 0 or any color is out of
  // range.
  ColorState(std::vector<Color> colors, Color palette_size);

  std::size_t size() const { return colors_.size(); }
  Color palette_size() const { return palette_size_; }
  Color operator[](NodeIndex i) const { return colors_[i]; }
  std::span<const Color> colors() const { return colors_; }

  // Returns a copy with node i set to `color`.
  ColorState with(NodeIndex i, Color color) const;

  bool operator==(const ColorState&) const = default;

 private:
  std::vector<Color> colors_;
  Color palette_size_;
};

// Comma-separated 1-based colors, e.g. "1,2,1".
std::string format_state(const ColorState& s);
ColorState parse_state(std::string_view text, Color palette_size);

// C, C-bar and X.
enum class ConflictState : std::uint8_t { kConflict, kNoConflict, kConfused };

std::string_view symbol(ConflictState state);

// Classifies `node` from its own color and the colors of its neighbors.
// Throws std::invalid_argument for an isolated node: there is nothing to be in
// conflict with.
ConflictState conflict_state(const FlowGraph& g, const ColorState& s, NodeIndex node);

// Same classification from raw colors; `neighbor_colors` must be non-empty.
ConflictState classify(Color own, std::span<const Color> neighbor_colors);

// Number of monochromatic edges.
std::size_t count_defects(const FlowGraph& g, const ColorState& s);

// Fast path for path graphs where the state is the whole story.
std::size_t count_path_defects(std::span<const Color> colors);

struct DefectGroup {
  NodeIndex start = 0;
  std::size_t length = 0;
  Color color = 0;

  bool operator==(const DefectGroup&) const = default;
};

// Maximal monochromatic runs along a path, singletons included.
struct DefectGroupDecomposition {
  std::vector<DefectGroup> groups;

  std::size_t defects() const;
  std::vector<std::size_t> sizes() const;
};

// Throws std::invalid_argument unless g is a labelled path.
DefectGroupDecomposition defect_groups(const FlowGraph& g, const ColorState& s);

// Run-length decomposition of a bare color sequence.
DefectGroupDecomposition run_groups(std::span<const Color> colors);

}  // namespace pathcolor
