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

#include <sstream>

#include <gtest/gtest.h>

namespace pathcolor {
namespace {

TEST(VerifyTest, SingleCell) {
  VerifyConfig cfg;
  cfg.theorems = {2};
  cfg.n_min = cfg.n_max = 3;
  cfg.c_min = cfg.c_max = 2;
  const auto s = run_verify(cfg);
  EXPECT_TRUE(s.ok);
  ASSERT_EQ(s.rows.size(), 3u);
  EXPECT_EQ(s.rows[1].closed_form, "4");
  EXPECT_EQ(s.rows[1].oracle, "4");
}

TEST(VerifyTest, FullDefaultGrid) {
  const auto s = run_verify(VerifyConfig{});
  EXPECT_TRUE(s.ok);
  EXPECT_TRUE(s.center_checked);
  EXPECT_EQ(s.matching_center_variants, std::vector<CenterFormVariant>{CenterFormVariant::kDMinus2k});
  EXPECT_FALSE(s.first_failure.has_value());
}

TEST(VerifyTest, BudgetChecked) {
  VerifyConfig cfg;
  cfg.n_max = 12;
  cfg.oracle.budget.max_work = 1000;
  EXPECT_THROW(run_verify(cfg), BudgetExceeded);
}

TEST(VerifyTest, CsvHeader) {
  VerifyConfig cfg;
  cfg.theorems = {4};
  cfg.n_min = cfg.n_max = 4;
  cfg.c_min = cfg.c_max = 2;
  const auto s = run_verify(cfg);
  std::ostringstream out;
  write_verify_csv(out, s.rows);
  EXPECT_EQ(out.str(), "theorem,n,c,d,closed_form,oracle,match\n4,4,2,0,8,8,true\n4,4,2,1,8,8,true\n"
                       "4,4,2,2,0,0,true\n4,4,2,3,0,0,true\n");
}

}  // namespace
}  // namespace pathcolor
