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
#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace pathcolor {

namespace {

constexpr unsigned kDeg1C = 1U << 0;
constexpr unsigned kDeg1Cbar = 1U << 1;
constexpr unsigned kDeg2C = 1U << 2;
constexpr unsigned kDeg2Cbar = 1U << 3;
constexpr unsigned kDeg2X = 1U << 4;

constexpr std::string_view kCbarUtf8 = "C̄";

unsigned bit_for(std::size_t degree, ConflictState state) {
  if (degree == 1) {
    switch (state) {
      case ConflictState::kConflict: return kDeg1C;
      case ConflictState::kNoConflict: return kDeg1Cbar;
      case ConflictState::kConfused:
        throw std::invalid_argument("a degree-1 node cannot be confused");
    }
  }
  if (degree == 2) {
    switch (state) {
      case ConflictState::kConflict: return kDeg2C;
      case ConflictState::kNoConflict: return kDeg2Cbar;
      case ConflictState::kConfused: return kDeg2X;
    }
  }
  throw std::invalid_argument(
      fmt::format("one-round path protocols take degree 1 or 2 views, got degree {}", degree));
}

std::string render(unsigned mask, unsigned c_bit, unsigned cbar_bit, unsigned x_bit,
                   std::string_view cbar, std::string_view empty) {
  std::string out;
  if (mask & c_bit) out += "C";
  if (mask & cbar_bit) out += cbar;
  if (x_bit && (mask & x_bit)) out += "X";
  return out.empty() ? std::string(empty) : out;
}

// Parses one side of a tuple into its bits. `x_bit` == 0 means X is not
// allowed on this side.
unsigned parse_side(std::string_view side, unsigned c_bit, unsigned cbar_bit, unsigned x_bit,
                    std::string_view whole) {
  if (side == "phi" || side == "φ" || side == "ϕ" || side == "0" || side.empty()) return 0;
  unsigned bits = 0;
  auto take = [&](unsigned bit) {
    if (bits & bit) throw std::invalid_argument(fmt::format("repeated state in protocol '{}'", whole));
    bits |= bit;
  };
  while (!side.empty()) {
    if (side.starts_with("Cbar")) {
      take(cbar_bit);
      side.remove_prefix(4);
    } else if (side.starts_with(kCbarUtf8)) {
      take(cbar_bit);
      side.remove_prefix(kCbarUtf8.size());
    } else if (side.starts_with("C")) {
      take(c_bit);
      side.remove_prefix(1);
    } else if (side.starts_with("X") && x_bit != 0) {
      take(x_bit);
      side.remove_prefix(1);
    } else {
      throw std::invalid_argument(fmt::format("unknown protocol '{}'", whole));
    }
  }
  return bits;
}

}  // namespace

ProtocolSpec ProtocolSpec::from_sets(std::span<const ConflictState> deg1_change,
                                     std::span<const ConflictState> deg2_change) {
  unsigned mask = 0;
  for (auto s : deg1_change) mask |= bit_for(1, s);
  for (auto s : deg2_change) mask |= bit_for(2, s);
  return ProtocolSpec(mask);
}

bool ProtocolSpec::changes(std::size_t degree, ConflictState state) const {
  return (mask_ & bit_for(degree, state)) != 0;
}

std::string ProtocolSpec::name() const {
  return fmt::format("({},{})", render(mask_, kDeg1C, kDeg1Cbar, 0, kCbarUtf8, "φ"),
                     render(mask_, kDeg2C, kDeg2Cbar, kDeg2X, kCbarUtf8, "φ"));
}

std::string ProtocolSpec::alias() const {
  return fmt::format("{}|{}", render(mask_, kDeg1C, kDeg1Cbar, 0, "Cbar", "phi"),
                     render(mask_, kDeg2C, kDeg2Cbar, kDeg2X, "Cbar", "phi"));
}

std::vector<ProtocolSpec> enumerate_protocols() {
  std::vector<ProtocolSpec> out;
  out.reserve(ProtocolSpec::kCount);
  for (unsigned m = 0; m < ProtocolSpec::kCount; ++m) out.emplace_back(m);
  return out;
}

ProtocolSpec parse_protocol(std::string_view text) {
  if (text == "random") return ProtocolSpec(0);
  if (text.starts_with("0b")) {
    std::string_view digits = text.substr(2);
    unsigned mask = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mask, 2);
    if (!digits.empty() && ec == std::errc{} && ptr == digits.data() + digits.size() && mask < 32) {
      return ProtocolSpec(mask);
    }
    throw std::invalid_argument(fmt::format("bad protocol mask '{}'", text));
  }
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    unsigned mask = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), mask);
    if (ec == std::errc{} && ptr == text.data() + text.size() && mask < 32) return ProtocolSpec(mask);
    throw std::invalid_argument(fmt::format("protocol mask '{}' outside 0..31", text));
  }

  std::string_view body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  const auto sep = body.find_first_of("|,");
  if (sep == std::string_view::npos) throw std::invalid_argument(fmt::format("unknown protocol '{}'", text));
  const unsigned deg1 = parse_side(body.substr(0, sep), kDeg1C, kDeg1Cbar, 0, text);
  const unsigned deg2 = parse_side(body.substr(sep + 1), kDeg2C, kDeg2Cbar, kDeg2X, text);
  return ProtocolSpec(deg1 | deg2);
}

Decision decide(ProtocolSpec spec, const LocalView& view) {
  const std::size_t degree = view.children.size();
  if (degree == 0 || degree > 2) {
    throw std::invalid_argument(
        fmt::format("one-round path protocols take degree 1 or 2 views, got degree {}", degree));
  }
  std::vector<Color> neighbor_colors;
  for (const auto& child : view.children) neighbor_colors.push_back(child.color);
  const auto state = classify(view.color, neighbor_colors);
  return spec.changes(degree, state) ? Decision::kRedraw : Decision::kKeep;
}

namespace {

void require_path_protocol_input(const FlowGraph& g, const ColorState& s0) {
  if (!g.is_labelled_path()) throw std::invalid_argument("protocols execute on path graphs only");
  if (g.node_count() < 2) throw std::invalid_argument("P_1 has no conflict states; protocols need n >= 2");
  if (s0.size() != g.node_count()) {
    throw std::invalid_argument(
        fmt::format("state has {} colors for {} nodes", s0.size(), g.node_count()));
  }
}

}  // namespace

std::vector<NodeIndex> redrawing_nodes(const FlowGraph& g, const ColorState& s0, ProtocolSpec spec) {
  require_path_protocol_input(g, s0);
  const auto colors = s0.colors();
  const std::size_t n = colors.size();
  std::vector<NodeIndex> out;
  for (NodeIndex i = 0; i < n; ++i) {
    ConflictState state;
    std::size_t degree;
    if (i == 0 || i + 1 == n) {
      degree = 1;
      const Color nb = colors[i == 0 ? 1 : n - 2];
      state = nb == colors[i] ? ConflictState::kConflict : ConflictState::kNoConflict;
    } else {
      degree = 2;
      const int same = (colors[i - 1] == colors[i]) + (colors[i + 1] == colors[i]);
      state = same == 2 ? ConflictState::kConflict
                        : (same == 0 ? ConflictState::kNoConflict : ConflictState::kConfused);
    }
    if (spec.changes(degree, state)) out.push_back(i);
  }
  return out;
}

std::vector<NodeIndex> redrawing_nodes_via_views(const FlowGraph& g, const ColorState& s0,
                                                 ProtocolSpec spec) {
  require_path_protocol_input(g, s0);
  const auto trees = run_rounds(g, s0, 1);
  std::vector<NodeIndex> out;
  for (NodeIndex i = 0; i < trees.size(); ++i) {
    if (decide(spec, anonymize(trees[i])) == Decision::kRedraw) out.push_back(i);
  }
  return out;
}

ColorState apply_redraws(const ColorState& s0, std::span<const NodeIndex> nodes,
                         std::span<const std::uint64_t> draws) {
  if (nodes.size() != draws.size()) {
    throw std::invalid_argument(
        fmt::format("{} redrawing nodes but {} draws", nodes.size(), draws.size()));
  }
  const Color c = s0.palette_size();
  std::vector<Color> colors(s0.colors().begin(), s0.colors().end());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (draws[k] + 1 >= c) {
      throw std::invalid_argument(fmt::format("draw {} outside 0..{}", draws[k], c - 2));
    }
    // Skip over the current color.
    Color next = static_cast<Color>(draws[k]) + 1;
    if (next >= colors[nodes[k]]) ++next;
    colors[nodes[k]] = next;
  }
  return ColorState(std::move(colors), c);
}

ProtocolOutcome execute_with_draws(const FlowGraph& g, const ColorState& s0, ProtocolSpec spec,
                                   std::span<const std::uint64_t> draws) {
  if (s0.palette_size() < 2) throw std::invalid_argument("protocol execution needs at least 2 colors");
  auto nodes = redrawing_nodes(g, s0, spec);
  auto final_state = apply_redraws(s0, nodes, draws);
  return {std::move(final_state), std::move(nodes)};
}

ProtocolOutcome execute(const FlowGraph& g, const ColorState& s0, ProtocolSpec spec, CounterRng& rng) {
  if (s0.palette_size() < 2) throw std::invalid_argument("protocol execution needs at least 2 colors");
  auto nodes = redrawing_nodes(g, s0, spec);
  std::vector<std::uint64_t> draws(nodes.size());
  for (auto& d : draws) d = rng.uniform(s0.palette_size() - 1);
  auto final_state = apply_redraws(s0, nodes, draws);
  return {std::move(final_state), std::move(nodes)};
}

std::vector<WeightedOutcome> execute_all_outcomes(const FlowGraph& g, const ColorState& s0,
                                                  ProtocolSpec spec, std::uint64_t cap) {
  if (s0.palette_size() < 2) throw std::invalid_argument("protocol execution needs at least 2 colors");
  const auto nodes = redrawing_nodes(g, s0, spec);
  const std::uint64_t choices = s0.palette_size() - 1;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (total > cap / choices) {
      throw std::length_error(fmt::format(
          "{}^{} joint redraw outcomes exceed the cap of {}; too large, use Monte Carlo", choices,
          nodes.size(), cap));
    }
    total *= choices;
  }
  const Rational p(1, total);
  std::vector<WeightedOutcome> out;
  out.reserve(total);
  std::vector<std::uint64_t> draws(nodes.size(), 0);
  for (std::uint64_t o = 0; o < total; ++o) {
    out.push_back({{apply_redraws(s0, nodes, draws), nodes}, p});
    // Odometer; the last node varies fastest.
    for (std::size_t k = draws.size(); k-- > 0;) {
      if (++draws[k] < choices) break;
      draws[k] = 0;
    }
  }
  return out;
}

}  // namespace pathcolor
