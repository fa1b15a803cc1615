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

#include "pathcolor/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "pathcolor/coloring.hpp"
#include "pathcolor/graph.hpp"

namespace pathcolor {

namespace {

struct Moments {
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
};

Moments run_trials(const FlowGraph& path, std::int64_t c, ProtocolSpec spec, std::uint64_t seed,
                   std::uint64_t begin, std::uint64_t end) {
  Moments m;
  const std::size_t n = path.node_count();
  std::vector<Color> colors(n);
  for (std::uint64_t t = begin; t < end; ++t) {
    CounterRng rng(seed, t);
    for (auto& col : colors) col = static_cast<Color>(rng.uniform(static_cast<std::uint64_t>(c))) + 1;
    const ColorState start(colors, static_cast<Color>(c));
    const auto outcome = execute(path, start, spec, rng);
    const std::uint64_t d = count_path_defects(outcome.final_state.colors());
    m.sum += d;
    m.sum_squares += d * d;
  }
  return m;
}

}  // namespace

TrialReport sample_protocol(std::int64_t n, std::int64_t c, ProtocolSpec spec, std::uint64_t trials,
                            std::uint64_t seed, unsigned workers) {
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  if (c < 2) throw std::invalid_argument(fmt::format("need c >= 2, got {}", c));
  if (n < 2) throw std::invalid_argument(fmt::format("protocols need n >= 2, got {}", n));
  const FlowGraph path = build_path(static_cast<std::size_t>(n));

  unsigned w = workers ? workers : std::max(1U, std::thread::hardware_concurrency());
  w = static_cast<unsigned>(std::min<std::uint64_t>(w, trials));
  std::vector<Moments> parts(w);
  auto chunk = [&](unsigned k) {
    const std::uint64_t begin = trials / w * k + std::min<std::uint64_t>(k, trials % w);
    const std::uint64_t end = begin + trials / w + (k < trials % w ? 1 : 0);
    parts[k] = run_trials(path, c, spec, seed, begin, end);
  };
  if (w == 1) {
    chunk(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < w; ++k) pool.emplace_back(chunk, k);
  }

  TrialReport r;
  r.protocol = spec;
  r.n = n;
  r.c = c;
  r.trials = trials;
  r.seed = seed;
  for (const auto& p : parts) {
    r.sum += p.sum;
    r.sum_squares += p.sum_squares;
  }
  const double t = static_cast<double>(trials);
  r.mean_defects = static_cast<double>(r.sum) / t;
  if (trials > 1) {
    const double var = (static_cast<double>(r.sum_squares) - t * r.mean_defects * r.mean_defects) / (t - 1);
    r.stderr_defects = std::sqrt(std::max(var, 0.0) / t);
  }
  return r;
}

TrialReport exact_protocol_report(std::int64_t n, std::int64_t c, ProtocolSpec spec, const OracleOptions& options) {
  const auto dist = oracle_protocol_distribution(n, c, spec, options);
  TrialReport r;
  r.protocol = spec;
  r.n = n;
  r.c = c;
  r.exact_mean = average_defects(dist);
  r.mean_defects = to_double(*r.exact_mean);
  return r;
}

std::vector<CurveRow> curve_dataset(const CurveConfig& config) {
  if (config.colors.empty() || config.protocols.empty()) {
    throw std::invalid_argument("need at least one color count and one protocol");
  }
  std::vector<CurveRow> rows;
  for (const std::int64_t c : config.colors) {
    if (c < 2) throw std::invalid_argument(fmt::format("color counts start at 2, got {}", c));
    auto measure = [&](ProtocolSpec spec) {
      if (config.exact_budget &&
          protocol_enumeration_work(config.n, c, spec) <= config.exact_budget->max_work) {
        return exact_protocol_report(config.n, c, spec, {*config.exact_budget, config.workers});
      }
      return sample_protocol(config.n, c, spec, config.trials, config.seed, config.workers);
    };

    double baseline = static_cast<double>(config.n - 1) / static_cast<double>(c);
    std::optional<TrialReport> random_run;
    if (config.baseline == Baseline::kSampled) {
      random_run = measure(ProtocolSpec(0));
      baseline = random_run->mean_defects;
    }
    for (const auto spec : config.protocols) {
      CurveRow row;
      row.report = (random_run && spec == ProtocolSpec(0)) ? *random_run : measure(spec);
      row.c_over_chi = static_cast<double>(c) / kPathChromaticNumber;
      row.baseline_mean = baseline;
      row.normalized_mean = baseline > 0 ? row.report.mean_defects / baseline : 0.0;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_curve_csv(std::ostream& out, std::span<const CurveRow> rows) {
  fmt::print(out, "protocol,n,c,c_over_chi,trials,mean,stderr,normalized_mean,seed\n");
  for (const auto& row : rows) {
    const auto& r = row.report;
    fmt::print(out, "{},{},{},{:g},{},{:.6f},{:.6f},{:.6f},{}\n", r.protocol.alias(), r.n, r.c, row.c_over_chi,
               r.trials, r.mean_defects, r.stderr_defects, row.normalized_mean, r.seed);
  }
}

}  // namespace pathcolor
