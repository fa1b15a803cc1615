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

#include "pathcolor/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace pathcolor {

namespace {

const ProtocolSpec kEdgeCorrecting = parse_protocol("C|phi");
const ProtocolSpec kCenterCorrecting = parse_protocol("phi|C");

bool wants(const VerifyConfig& config, int theorem) {
  return std::find(config.theorems.begin(), config.theorems.end(), theorem) != config.theorems.end();
}

void append(std::vector<VerifyRow>& rows, const std::string& theorem, std::int64_t n, std::int64_t c,
            const DefectDistribution& closed, const DefectDistribution& oracle) {
  for (std::int64_t d = 0; d < n; ++d) {
    const auto& a = closed.counts.at(d);
    const auto& b = oracle.counts.at(d);
    rows.push_back({theorem, n, c, d, to_string(a), to_string(b), a == b});
  }
}

void precheck_budget(const VerifyConfig& config) {
  const auto cap = config.oracle.budget.max_work;
  for (std::int64_t n = config.n_min; n <= config.n_max; ++n) {
    for (std::int64_t c = config.c_min; c <= config.c_max; ++c) {
      std::uint64_t work = 0;
      if (wants(config, 2) || wants(config, 3)) work = std::max(work, random_enumeration_work(n, c));
      if (wants(config, 4) && n >= 4) work = std::max(work, protocol_enumeration_work(n, c, kEdgeCorrecting));
      if (wants(config, 5) && n >= 3 && c == 2) {
        work = std::max(work, protocol_enumeration_work(n, c, kCenterCorrecting));
      }
      if (work > cap) throw BudgetExceeded(work, cap);
    }
  }
}

}  // namespace

VerifySummary run_verify(const VerifyConfig& config) {
  if (config.n_min < 1 || config.n_max < config.n_min || config.c_min < 2 || config.c_max < config.c_min) {
    throw std::invalid_argument(fmt::format("bad verify ranges n=[{},{}] c=[{},{}]", config.n_min,
                                            config.n_max, config.c_min, config.c_max));
  }
  for (int t : config.theorems) {
    if (t < 2 || t > 5) throw std::invalid_argument(fmt::format("no closed form to verify for theorem {}", t));
  }
  precheck_budget(config);

  VerifySummary summary;
  auto& rows = summary.rows;
  std::vector<std::vector<VerifyRow>> center_rows(all_center_variants().size());

  for (std::int64_t n = std::max<std::int64_t>(config.n_min, 2); n <= config.n_max; ++n) {
    for (std::int64_t c = config.c_min; c <= config.c_max; ++c) {
      if (wants(config, 2)) {
        append(rows, "2", n, c, random_defect_distribution(n, c), oracle_random_distribution(n, c, config.oracle));
      }
      if (wants(config, 3)) {
        const auto closed = group_count_vector(n, c);
        const auto oracle = oracle_group_counts(n, c, config.oracle);
        for (std::int64_t i = 0; i < n; ++i) {
          rows.push_back({"3", n, c, i + 1, closed.counts[i].str(), oracle.counts[i].str(),
                          closed.counts[i] == oracle.counts[i]});
        }
      }
      if (wants(config, 4) && n >= 4) {
        append(rows, "4", n, c, edge_correcting_distribution(n, c),
               oracle_protocol_distribution(n, c, kEdgeCorrecting, config.oracle));
      }
      if (wants(config, 5) && n >= 3 && c == 2) {
        summary.center_checked = true;
        const auto oracle = oracle_protocol_distribution(n, c, kCenterCorrecting, config.oracle);
        const auto variants = all_center_variants();
        for (std::size_t v = 0; v < variants.size(); ++v) {
          append(center_rows[v], fmt::format("5/{}", variant_name(variants[v])), n, c,
                 center_correcting_distribution_c2(n, variants[v]), oracle);
        }
      }
    }
  }

  for (const auto& row : rows) {
    if (!row.match) {
      summary.ok = false;
      if (!summary.first_failure) summary.first_failure = row;
    }
  }

  if (summary.center_checked) {
    const auto variants = all_center_variants();
    std::optional<VerifyRow> first_center_failure;
    for (std::size_t v = 0; v < variants.size(); ++v) {
      const bool all = std::all_of(center_rows[v].begin(), center_rows[v].end(),
                                   [](const VerifyRow& r) { return r.match; });
      if (all) summary.matching_center_variants.push_back(variants[v]);
      for (const auto& row : center_rows[v]) {
        if (!row.match && !first_center_failure) first_center_failure = row;
      }
      rows.insert(rows.end(), center_rows[v].begin(), center_rows[v].end());
    }
    if (summary.matching_center_variants.empty()) {
      summary.ok = false;
      if (!summary.first_failure) summary.first_failure = first_center_failure;
    }
  }
  return summary;
}

void write_verify_csv(std::ostream& out, std::span<const VerifyRow> rows) {
  fmt::print(out, "theorem,n,c,d,closed_form,oracle,match\n");
  for (const auto& r : rows) {
    fmt::print(out, "{},{},{},{},{},{},{}\n", r.theorem, r.n, r.c, r.d, r.closed_form, r.oracle,
               r.match ? "true" : "false");
  }
}

}  // namespace pathcolor
