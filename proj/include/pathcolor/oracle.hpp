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
#include <stdexcept>
#include <string>

#include "pathcolor/analytics.hpp"
#include "pathcolor/protocols.hpp"

namespace pathcolor {

// Cap on elementary state evaluations. Enumeration refuses rather than
// truncates when the estimate is over the cap.
struct EnumerationBudget {
  static constexpr std::uint64_t kDefaultMaxWork = 100'000'000;
  std::uint64_t max_work = kDefaultMaxWork;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t needed, std::uint64_t cap);
  std::uint64_t needed() const { return needed_; }

 private:
  std::uint64_t needed_;
};

// 0 picks std::thread::hardware_concurrency(). Results never depend on it.
struct OracleOptions {
  EnumerationBudget budget;
  unsigned workers = 0;
};

// Estimated work, saturating at UINT64_MAX.
std::uint64_t random_enumeration_work(std::int64_t n, std::int64_t c);
// c^n * (c-1)^(nodes that could ever re-draw under spec).
std::uint64_t protocol_enumeration_work(std::int64_t n, std::int64_t c, ProtocolSpec spec);

// Tally of count_defects over all c^n states of P_n.
DefectDistribution oracle_random_distribution(std::int64_t n, std::int64_t c, const OracleOptions& options = {});

// Tally of maximal monochromatic run lengths over all c^n states of P_n.
GroupCountVector oracle_group_counts(std::int64_t n, std::int64_t c, const OracleOptions& options = {});

// Sum over all c^n starting states of the final-defect distribution of one
// execution of spec, each start weighted by its exact outcome probabilities.
// Entries are exact rationals summing to c^n.
DefectDistribution oracle_protocol_distribution(std::int64_t n, std::int64_t c, ProtocolSpec spec,
                                                const OracleOptions& options = {});

}  // namespace pathcolor
