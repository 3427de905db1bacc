// Copyright 2026 The famcg Authors
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

#include "famcg/enumeration.h"

#include <stdexcept>

#include "famcg/verify.h"
#include "gtest/gtest.h"
#include "oracles/brute_force.h"

namespace famcg {
namespace {

TEST(EnumerateColumnsTest, MatchesSubsetOracle) {
  for (uint64_t k = 0; k < 10; ++k) {
    const Instance inst = oracle::TinyInstance(k);
    const std::vector<Column> cols = EnumerateColumns(inst, 1 << 20);
    const std::vector<oracle::Subset> subsets = oracle::EnumerateSubsets(inst);
    ASSERT_EQ(cols.size(), subsets.size()) << "instance " << k;
    for (size_t l = 0; l < cols.size(); ++l) {
      EXPECT_EQ(cols[l].facility, subsets[l].facility);
      EXPECT_EQ(cols[l].customers, subsets[l].members);
      EXPECT_NO_THROW(ValidateColumn(inst, cols[l]));
    }
  }
}

TEST(EnumerateColumnsTest, HandCount) {
  // K = 2 with demands {1, 1, 2}: {0}, {1}, {2}, {0,1}.
  const Instance inst({1.0}, {2}, {1, 1, 2}, {{1.0, 1.0, 1.0}});
  EXPECT_EQ(EnumerateColumns(inst, 100).size(), 4u);
  EXPECT_THROW(EnumerateColumns(inst, 3), std::length_error);
}

TEST(EnumerateColumnsTest, RefusesFullScale) {
  const Instance inst = GenerateInstance(1, GeneratorParams{});
  EXPECT_THROW(EnumerateColumns(inst, 2000000), std::length_error);
}

TEST(SolveFullMasterTest, MatchesOracle) {
  for (uint64_t k = 0; k < 10; ++k) {
    const Instance inst = oracle::TinyInstance(k);
    const auto expected = oracle::MasterObjective(inst);
    const MasterSolution m = SolveFullMaster(inst, 1 << 20);
    EXPECT_EQ(m.feasible, expected.has_value()) << "instance " << k;
    if (expected) {
      EXPECT_NEAR(m.lp.objective, *expected, 1e-6);
    }
  }
}

TEST(VerifyInstanceTest, AllChecksPassOnSmallCase) {
  GeneratorParams p;
  p.num_facilities = 2;
  p.num_customers = 4;
  p.capacity = 6;
  p.demand_choices = {1, 2};
  const Instance inst = GenerateInstance(3, p);
  VerifyOptions opts;
  opts.bound_samples = 200;
  const std::vector<CheckResult> checks = VerifyInstance(inst, opts);
  ASSERT_EQ(checks.size(), 8u);
  for (const CheckResult& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

}  // namespace
}  // namespace famcg
