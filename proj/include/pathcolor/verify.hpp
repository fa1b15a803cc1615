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

#include "pathcolor/analytics.hpp"
#include "pathcolor/oracle.hpp"

namespace pathcolor {

// Closed form versus brute force over a grid of (n, c).
//
// Checks are selected by id (the "theorem" CSV column):
//   2  random assignment distribution        n >= 2
//   3  group-size counts (d column = size)   n >= 2
//   4  edge correcting (C,φ)                 n >= 4
//   5  center correcting (φ,C), c = 2 only   n >= 3, one row set per formula
//      variant; passes if any variant matches every cell
struct VerifyConfig {
  std::vector<int> theorems{2, 3, 4, 5};
  std::int64_t n_min = 2;
  std::int64_t n_max = 8;
  std::int64_t c_min = 2;
  std::int64_t c_max = 3;
  OracleOptions oracle;
};

struct VerifyRow {
  std::string theorem;
  std::int64_t n = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;
  std::string closed_form;
  std::string oracle;
  bool match = false;
};

struct VerifySummary {
  std::vector<VerifyRow> rows;
  bool ok = true;
  std::optional<VerifyRow> first_failure;
  // Center correcting variants that matched every cell checked.
  std::vector<CenterFormVariant> matching_center_variants;
  bool center_checked = false;
};

// Throws BudgetExceeded before doing any work if some cell is over budget.
VerifySummary run_verify(const VerifyConfig& config);

// theorem,n,c,d,closed_form,oracle,match
void write_verify_csv(std::ostream& out, std::span<const VerifyRow> rows);

}  // namespace pathcolor
