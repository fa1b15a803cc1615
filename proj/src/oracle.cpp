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

#include "pathcolor/oracle.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "pathcolor/coloring.hpp"
#include "pathcolor/graph.hpp"

namespace pathcolor {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::int64_t exp) {
  std::uint64_t out = 1;
  for (std::int64_t k = 0; k < exp; ++k) out = saturating_mul(out, base);
  return out;
}

void check_args(std::int64_t n, std::int64_t c, std::int64_t min_c) {
  if (n < 1 || c < min_c) {
    throw std::invalid_argument(fmt::format("need n >= 1 and c >= {}, got n={} c={}", min_c, n, c));
  }
}

void check_budget(std::uint64_t work, const EnumerationBudget& budget) {
  if (work > budget.max_work) throw BudgetExceeded(work, budget.max_work);
}

unsigned resolve_workers(unsigned requested, std::uint64_t states) {
  unsigned w = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(states, 1)));
}

// Splits [0, c^n) into contiguous chunks, runs `visit` over each chunk's
// states in odometer order on its own worker and returns the per-chunk
// accumulators in chunk order.
template <class Acc>
std::vector<Acc> enumerate_states(std::int64_t n, std::int64_t c, unsigned workers, const Acc& init,
                                  const std::function<void(std::span<const Color>, Acc&)>& visit) {
  const std::uint64_t states = saturating_pow(static_cast<std::uint64_t>(c), n);
  const unsigned w = resolve_workers(workers, states);
  std::vector<Acc> parts(w, init);

  auto run_chunk = [&](unsigned chunk) {
    const std::uint64_t begin = states / w * chunk + std::min<std::uint64_t>(chunk, states % w);
    const std::uint64_t end = begin + states / w + (chunk < states % w ? 1 : 0);
    std::vector<Color> digits(n);
    std::uint64_t index = begin;
    for (std::int64_t k = n; k-- > 0;) {
      digits[k] = static_cast<Color>(index % c) + 1;
      index /= c;
    }
    for (std::uint64_t s = begin; s < end; ++s) {
      visit(digits, parts[chunk]);
      for (std::int64_t k = n; k-- > 0;) {
        if (digits[k] < static_cast<Color>(c)) {
          ++digits[k];
          break;
        }
        digits[k] = 1;
      }
    }
  };

  if (w == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(w);
    for (unsigned chunk = 0; chunk < w; ++chunk) pool.emplace_back(run_chunk, chunk);
  }
  return parts;
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t needed, std::uint64_t cap)
    : std::runtime_error(fmt::format(
          "enumeration needs ~{} state evaluations, over the budget of {}; raise --budget or use Monte Carlo",
          needed == UINT64_MAX ? std::string(">1.8e19") : std::to_string(needed), cap)),
      needed_(needed) {}

std::uint64_t random_enumeration_work(std::int64_t n, std::int64_t c) {
  return saturating_pow(static_cast<std::uint64_t>(c), n);
}

std::uint64_t protocol_enumeration_work(std::int64_t n, std::int64_t c, ProtocolSpec spec) {
  std::int64_t max_redraws = 0;
  if (n >= 2) {
    const bool deg1 = (spec.mask() & 0b00011U) != 0;
    const bool deg2 = (spec.mask() & 0b11100U) != 0;
    max_redraws = (deg1 ? 2 : 0) + (deg2 ? n - 2 : 0);
  }
  return saturating_mul(random_enumeration_work(n, c), saturating_pow(static_cast<std::uint64_t>(c - 1), max_redraws));
}

DefectDistribution oracle_random_distribution(std::int64_t n, std::int64_t c, const OracleOptions& options) {
  check_args(n, c, 1);
  check_budget(random_enumeration_work(n, c), options.budget);
  using Tally = std::vector<std::uint64_t>;
  const auto parts = enumerate_states<Tally>(
      n, c, options.workers, Tally(n, 0),
      [](std::span<const Color> colors, Tally& tally) { ++tally[count_path_defects(colors)]; });
  DefectDistribution out;
  out.counts.assign(n, 0);
  for (const auto& part : parts) {
    for (std::int64_t d = 0; d < n; ++d) out.counts[d] += part[d];
  }
  return out;
}

GroupCountVector oracle_group_counts(std::int64_t n, std::int64_t c, const OracleOptions& options) {
  check_args(n, c, 1);
  check_budget(random_enumeration_work(n, c), options.budget);
  using Tally = std::vector<std::uint64_t>;
  const auto parts = enumerate_states<Tally>(n, c, options.workers, Tally(n, 0),
                                             [](std::span<const Color> colors, Tally& tally) {
                                               for (const auto& g : run_groups(colors).groups) {
                                                 ++tally[g.length - 1];
                                               }
                                             });
  GroupCountVector out;
  out.counts.assign(n, 0);
  for (const auto& part : parts) {
    for (std::int64_t i = 0; i < n; ++i) out.counts[i] += part[i];
  }
  return out;
}

DefectDistribution oracle_protocol_distribution(std::int64_t n, std::int64_t c, ProtocolSpec spec,
                                                const OracleOptions& options) {
  check_args(n, c, 2);
  if (n < 2) throw std::invalid_argument("protocols need n >= 2");
  check_budget(protocol_enumeration_work(n, c, spec), options.budget);

  const FlowGraph path = build_path(static_cast<std::size_t>(n));
  // Numerators over the common denominator (c-1)^n.
  std::vector<BigInt> weight(n + 1);
  for (std::int64_t k = 0; k <= n; ++k) weight[k] = ipow(c - 1, n - k);

  using Acc = std::vector<BigInt>;
  const auto parts = enumerate_states<Acc>(
      n, c, options.workers, Acc(n, 0), [&](std::span<const Color> colors, Acc& acc) {
        const ColorState start(std::vector<Color>(colors.begin(), colors.end()), static_cast<Color>(c));
        const auto outcomes = execute_all_outcomes(path, start, spec, UINT64_MAX);
        std::vector<std::uint64_t> hits(n, 0);
        for (const auto& o : outcomes) ++hits[count_path_defects(o.outcome.final_state.colors())];
        const std::size_t k = outcomes.front().outcome.changed.size();
        for (std::int64_t d = 0; d < n; ++d) {
          if (hits[d]) acc[d] += hits[d] * weight[k];
        }
      });

  const BigInt denominator = ipow(c - 1, n);
  DefectDistribution out;
  out.counts.assign(n, 0);
  for (std::int64_t d = 0; d < n; ++d) {
    BigInt numerator = 0;
    for (const auto& part : parts) numerator += part[d];
    out.counts[d] = Rational(numerator, denominator);
  }
  return out;
}

}  // namespace pathcolor
