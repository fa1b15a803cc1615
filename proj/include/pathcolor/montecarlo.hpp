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

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pathcolor/exact.hpp"
#include "pathcolor/oracle.hpp"
#include "pathcolor/protocols.hpp"

namespace pathcolor {

struct TrialReport {
  ProtocolSpec protocol;
  std::int64_t n = 0;
  std::int64_t c = 0;
  // 0 marks an exact (enumerated) report.
  std::uint64_t trials = 0;
  double mean_defects = 0;
  double stderr_defects = 0;
  std::uint64_t seed = 0;
  // Integer moments the mean and stderr were derived from.
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
  // Set for exact reports.
  std::optional<Rational> exact_mean;
};

// Trial t draws its start and its re-draws from CounterRng(seed, t): n
// uniform colors, then one draw per re-drawing node in ascending order. The
// same seed therefore gives every protocol the same starting states.
// `workers` == 0 picks hardware concurrency; results never depend on it.
TrialReport sample_protocol(std::int64_t n, std::int64_t c, ProtocolSpec spec, std::uint64_t trials,
                            std::uint64_t seed, unsigned workers = 1);

// Exact mean via full enumeration.
TrialReport exact_protocol_report(std::int64_t n, std::int64_t c, ProtocolSpec spec,
                                  const OracleOptions& options = {});

enum class Baseline { kExact, kSampled };

struct CurveRow {
  TrialReport report;
  double c_over_chi = 0;
  double baseline_mean = 0;
  double normalized_mean = 0;
};

struct CurveConfig {
  std::int64_t n = 50;
  std::vector<std::int64_t> colors;
  std::vector<ProtocolSpec> protocols;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 7;
  Baseline baseline = Baseline::kExact;
  unsigned workers = 1;
  // Use enumeration instead of sampling when it fits this budget.
  std::optional<EnumerationBudget> exact_budget;
};

// Chromatic number of a path with at least one edge.
inline constexpr double kPathChromaticNumber = 2.0;

// Rows in (c, protocol) order. Each protocol's mean is divided by the random
// assignment's mean at the same c: (n-1)/c for kExact, or the (φ,φ) run with
// the same seed for kSampled.
std::vector<CurveRow> curve_dataset(const CurveConfig& config);

// protocol,n,c,c_over_chi,trials,mean,stderr,normalized_mean,seed
void write_curve_csv(std::ostream& out, std::span<const CurveRow> rows);

}  // namespace pathcolor
