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

#include "pathcolor/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace pathcolor {

namespace {

std::vector<NodeType> layer_types(const FlowGraph& g, const std::vector<std::size_t>& dist,
                                  std::size_t r) {
  std::vector<NodeType> out;
  for (NodeIndex v = 0; v < dist.size(); ++v) {
    if (dist[v] == r) out.push_back(node_type(g, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::size_t symmetric_radius(const FlowGraph& g, NodeIndex i, NodeIndex j, std::size_t r_max) {
  const auto di = g.distances_from(i);
  const auto dj = g.distances_from(j);
  std::size_t r = 0;
  while (r < r_max && layer_types(g, di, r + 1) == layer_types(g, dj, r + 1)) ++r;
  return r;
}

std::optional<SymmetricPair> find_symmetric_pair(const FlowGraph& g, std::size_t r_max) {
  if (r_max == 0) throw std::invalid_argument("symmetry radius must be at least 1");
  const std::size_t dia = diameter(g);
  if (r_max >= dia) {
    throw std::invalid_argument(fmt::format(
        "radius {} is not below the diameter {}; the impossibility argument needs R < dia(G)", r_max, dia));
  }
  std::optional<SymmetricPair> best;
  for (auto [i, j] : g.edges()) {
    const std::size_t r = symmetric_radius(g, i, j, r_max);
    if (r >= 1 && (!best || r > best->radius)) best = SymmetricPair{i, j, r, {}};
  }
  if (best) {
    const auto di = g.distances_from(best->i);
    const auto dj = g.distances_from(best->j);
    for (std::size_t r = 1; r <= best->radius; ++r) {
      best->layer_witness.emplace_back(layer_types(g, di, r), layer_types(g, dj, r));
    }
  }
  return best;
}

ColorState adversarial_state(const FlowGraph& g, const SymmetricPair& pair, Color c) {
  if (c < 2) throw std::invalid_argument("adversarial state needs at least 2 colors");
  if (!g.adjacent(pair.i, pair.j)) {
    throw std::invalid_argument(fmt::format("nodes {} and {} are not adjacent", pair.i + 1, pair.j + 1));
  }
  const auto di = g.distances_from(pair.i);
  const auto dj = g.distances_from(pair.j);
  std::vector<Color> colors(g.node_count());
  for (NodeIndex v = 0; v < colors.size(); ++v) {
    colors[v] = static_cast<Color>(1 + std::min(di[v], dj[v]) % c);
  }
  return ColorState(std::move(colors), c);
}

bool ImpossibilityReport::all_defective() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const auto& row) { return row.pair_defect_probability > 0; });
}

ImpossibilityReport impossibility_check(const FlowGraph& g, const SymmetricPair& pair, Color c) {
  if (pair.radius == 0) throw std::invalid_argument("pair must be at least 1-hop symmetric");
  ImpossibilityReport report{pair, adversarial_state(g, pair, c), c, false, false, {}};

  const auto one_round = run_rounds(g, report.state, 1);
  const LocalView view_i = anonymize(one_round[pair.i]);
  const LocalView view_j = anonymize(one_round[pair.j]);
  report.one_round_views_equal = view_i == view_j;
  const auto full = run_rounds(g, report.state, pair.radius);
  report.radius_views_equal = anonymize(full[pair.i]) == anonymize(full[pair.j]);

  for (const auto spec : enumerate_protocols()) {
    ProtocolImpossibilityRow row{spec, decide(spec, view_i), decide(spec, view_j), 0, 0, 0};
    const auto outcomes = execute_all_outcomes(g, report.state, spec);
    row.outcomes = outcomes.size();
    for (const auto& [outcome, p] : outcomes) {
      if (outcome.final_state[pair.i] == outcome.final_state[pair.j]) row.pair_defect_probability += p;
      row.expected_defects += p * count_defects(g, outcome.final_state);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::optional<ColorState> find_defective_start(const FlowGraph& g, ProtocolSpec spec, Color c) {
  if (c < 2) throw std::invalid_argument("protocol execution needs at least 2 colors");
  const std::size_t n = g.node_count();
  std::vector<Color> digits(n, 1);
  while (true) {
    const ColorState start(digits, c);
    for (const auto& [outcome, p] : execute_all_outcomes(g, start, spec)) {
      if (count_defects(g, outcome.final_state) > 0) return start;
    }
    std::size_t k = n;
    while (k > 0 && digits[k - 1] == c) digits[--k] = 1;
    if (k == 0) return std::nullopt;
    ++digits[k - 1];
  }
}

}  // namespace pathcolor
