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

#include "famcg/solvers.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "famcg/enumeration.h"
#include "famcg/pricing.h"
#include "gtest/gtest.h"
#include "oracles/brute_force.h"

namespace famcg {
namespace {

constexpr Method kAll[] = {Method::kPlain, Method::kSmoothing, Method::kBoxStep,
                           Method::kFamily};

SolverOptions OptionsFor(Method method) {
  SolverOptions opts;
  opts.method = method;
  return opts;
}

void ExpectOptimalInvariants(const Instance& inst, const RunResult& run) {
  ASSERT_EQ(run.termination, Termination::kOptimal) << MethodName(run.method);
  EXPECT_TRUE(run.GapClosed()) << run.objective << " vs " << run.bound;
  const PricingResult pr = PriceAll(inst, ColumnPool(inst), run.final_duals);
  EXPECT_GE(pr.min_reduced_cost, -1e-7);
  EXPECT_LE(run.lp_time, run.total_time);
  double weight_cost = 0.0;
  for (const auto& [col, w] : run.theta) weight_cost += w * col.cost;
  EXPECT_NEAR(weight_cost, run.objective, 1e-7);
}

TEST(MethodTest, NamesRoundTrip) {
  for (Method m : kAll) EXPECT_EQ(ParseMethod(MethodName(m)), m);
  EXPECT_FALSE(ParseMethod("simplex").has_value());
  EXPECT_STREQ(MethodName(Method::kSmoothing), "smooth");
}

TEST(SolverOptionsTest, Validates) {
  SolverOptions o;
  EXPECT_NO_THROW(o.Validate());
  o.nu = 0.0;
  EXPECT_THROW(o.Validate(), std::invalid_argument);
  o = SolverOptions{};
  o.rc_tolerance = 0.0;
  EXPECT_THROW(o.Validate(), std::invalid_argument);
  o = SolverOptions{};
  o.inner_cap = 0;
  EXPECT_THROW(o.Validate(), std::invalid_argument);
  o = SolverOptions{};
  o.lambda_init = 1.5;
  EXPECT_THROW(o.Validate(), std::invalid_argument);
  o = SolverOptions{};
  o.m_cap = 0.5;
  EXPECT_THROW(RunMethod(oracle::TinyInstance(0), o), std::invalid_argument);
}

TEST(RunMethodTest, TinyInstancesMatchOracle) {
  int checked = 0;
  for (uint64_t k = 0; k < 10; ++k) {
    const Instance inst = oracle::TinyInstance(k);
    const auto mp = oracle::MasterObjective(inst);
    if (!mp) continue;
    for (Method m : kAll) {
      const RunResult run = RunMethod(inst, OptionsFor(m));
      ExpectOptimalInvariants(inst, run);
      EXPECT_NEAR(run.objective, *mp, 1e-6) << MethodName(m) << " instance " << k;
    }
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(RunMethodTest, TwoFacilityFourCustomerCase) {
  GeneratorParams p;
  p.num_facilities = 2;
  p.num_customers = 4;
  p.capacity = 6;
  p.demand_choices = {1, 2};
  const Instance inst = GenerateInstance(3, p);
  const auto mp = oracle::MasterObjective(inst);
  ASSERT_TRUE(mp.has_value());
  for (Method m : kAll) {
    const RunResult run = RunMethod(inst, OptionsFor(m));
    ExpectOptimalInvariants(inst, run);
    EXPECT_NEAR(run.objective, *mp, 1e-6) << MethodName(m);
  }
}

TEST(RunMethodTest, SingleUsableFacility) {
  // Facility 1 cannot take any customer, so facility 0 serves everyone with
  // its one full column.
  const Instance inst({2.0, 0.1}, {10, 1}, {2, 3, 2},
                      {{1.0, 2.0, 0.5}, {0.0, 0.0, 0.0}});
  const double full = ColumnCost(inst, 0, std::vector<int>{0, 1, 2});
  for (Method m : kAll) {
    const RunResult run = RunMethod(inst, OptionsFor(m));
    ExpectOptimalInvariants(inst, run);
    EXPECT_NEAR(run.objective, full, 1e-9) << MethodName(m);
  }
}

TEST(RunMethodTest, InfeasibleMasterIsFlagged) {
  // Total capacity 4 against total demand 6.
  const Instance inst({1.0, 1.0}, {2, 2}, {2, 2, 2}, {{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}});
  for (Method m : kAll) {
    SolverOptions opts = OptionsFor(m);
    opts.max_outer_iterations = 5000;
    const RunResult run = RunMethod(inst, opts);
    EXPECT_EQ(run.termination, Termination::kInfeasibleStart) << MethodName(m);
  }
}

TEST(RunMethodTest, IterationLimit) {
  const Instance inst = oracle::TinyInstance(1);
  for (Method m : kAll) {
    SolverOptions opts = OptionsFor(m);
    opts.max_outer_iterations = 1;
    const RunResult run = RunMethod(inst, opts);
    EXPECT_EQ(run.termination, Termination::kIterationLimit) << MethodName(m);
    EXPECT_EQ(run.iterations(), 1);
  }
}

TEST(RunSmoothingTest, ZeroLambdaReproducesPlainTrace) {
  GeneratorParams p;
  p.num_facilities = 5;
  p.num_customers = 20;
  p.capacity = 15;
  const Instance inst = GenerateInstance(8, p);
  SolverOptions opts = OptionsFor(Method::kSmoothing);
  opts.lambda_init = 0.0;
  opts.lambda_step = 0.0;
  const RunResult smooth = RunSmoothing(inst, opts);
  const RunResult plain = RunUnstabilized(inst, OptionsFor(Method::kPlain));
  ASSERT_EQ(smooth.iterations(), plain.iterations());
  for (int i = 0; i < plain.iterations(); ++i) {
    EXPECT_EQ(smooth.trace[i].rmp_obj, plain.trace[i].rmp_obj);
    EXPECT_EQ(smooth.trace[i].best_bound, plain.trace[i].best_bound);
    EXPECT_EQ(smooth.trace[i].n_columns, plain.trace[i].n_columns);
    EXPECT_EQ(smooth.trace[i].cols_added, plain.trace[i].cols_added);
    EXPECT_EQ(smooth.trace[i].misprices, 0);
  }
  EXPECT_EQ(smooth.objective, plain.objective);
}

TEST(RunBoxStepTest, HugeBoxBehavesLikePlain) {
  const Instance inst = oracle::TinyInstance(5);
  SolverOptions opts = OptionsFor(Method::kBoxStep);
  opts.nu = 1e6;
  const RunResult box = RunBoxStep(inst, opts);
  const RunResult plain = RunUnstabilized(inst, OptionsFor(Method::kPlain));
  ExpectOptimalInvariants(inst, box);
  EXPECT_NEAR(box.objective, plain.objective, 1e-6);
}

TEST(RunFamilyCgTest, NeverRepricesPooledColumns) {
  for (uint64_t seed = 1; seed <= 3; ++seed) {
    GeneratorParams p;
    p.num_facilities = 6;
    p.num_customers = 30;
    p.capacity = 20;
    const Instance inst = GenerateInstance(seed, p);
    const RunResult run = RunFamilyCg(inst, OptionsFor(Method::kFamily));
    ExpectOptimalInvariants(inst, run);
    EXPECT_EQ(run.duplicate_columns, 0);
    EXPECT_GT(run.priced_columns, 0);
    const RunResult plain = RunUnstabilized(inst, OptionsFor(Method::kPlain));
    EXPECT_NEAR(run.objective, plain.objective, 1e-6);
  }
}

TEST(RunFamilyCgTest, TraceHasOneRowPerOuterIteration) {
  const Instance inst = oracle::TinyInstance(6);
  const RunResult run = RunFamilyCg(inst, OptionsFor(Method::kFamily));
  ASSERT_FALSE(run.trace.empty());
  for (int i = 0; i < run.iterations(); ++i) {
    EXPECT_EQ(run.trace[i].iter, i + 1);
    EXPECT_GE(run.trace[i].inner_iters, 1);
    if (i > 0) {
      EXPECT_GE(run.trace[i].best_bound, run.trace[i - 1].best_bound);
      EXPECT_GE(run.trace[i].total_ms_cum, run.trace[i - 1].total_ms_cum);
    }
    EXPECT_LE(run.trace[i].lp_ms_cum, run.trace[i].total_ms_cum);
  }
  EXPECT_EQ(run.trace.back().n_columns, run.num_columns);
}

TEST(MaxStepTest, UnlimitedDirectionUsesCap) {
  const DualSolution pi0{{1.0, 2.0}, {0.5}};
  const DualSolution dir{{0.0, 3.0}, {1.0}};
  EXPECT_EQ(MaxStep(pi0, dir, 100.0), 100.0);
}

TEST(MaxStepTest, SingleBindingCoordinate) {
  const DualSolution pi0{{1.0, 2.0}, {0.0}};
  const DualSolution dir{{-0.5, 1.0}, {0.0}};
  const double m = MaxStep(pi0, dir, 100.0);
  EXPECT_EQ(m, 2.0);
  EXPECT_EQ(pi0.cover[0] + m * dir.cover[0], 0.0);
}

TEST(MaxStepTest, PackCoordinatesLimitToo) {
  const DualSolution pi0{{5.0}, {0.3}};
  const DualSolution dir{{-1.0}, {-0.1}};
  EXPECT_NEAR(MaxStep(pi0, dir, 100.0), 3.0, 1e-12);
}

TEST(SolveFrmpTest, OptimalStartBreaksImmediately) {
  const Instance inst = oracle::TinyInstance(2);
  ColumnPool pool(inst);
  for (const Column& c : EnumerateColumns(inst, 1 << 20)) pool.Insert(c);
  const RunResult plain = RunUnstabilized(inst, OptionsFor(Method::kPlain));
  ASSERT_EQ(plain.termination, Termination::kOptimal);
  const FrmpResult r = SolveFrmp(inst, pool, plain.final_duals, OptionsFor(Method::kFamily));
  EXPECT_EQ(r.ended_by, FrmpEnd::kOptimalBreak);
  EXPECT_EQ(r.iterations, 1);
  EXPECT_TRUE(r.step_lengths.empty());
  EXPECT_NEAR(r.lp.objective, plain.objective, 1e-7);
}

TEST(SolveFrmpTest, AscentIsMonotoneAndStepsAtLeastOne) {
  GeneratorParams p;
  p.num_facilities = 5;
  p.num_customers = 25;
  p.capacity = 15;
  const Instance inst = GenerateInstance(4, p);
  ColumnPool pool(inst);
  const DualSolution zero = DualSolution::Zero(inst);
  DualSolution pi = zero;
  for (double& v : pi.cover) v = 0.6;
  for (const PricedColumn& pc : PriceAll(inst, pool, pi).best) {
    if (!pc.column.customers.empty()) pool.Insert(pc.column);
  }
  std::ostringstream log;
  SolverOptions opts = OptionsFor(Method::kFamily);
  opts.inner_cap = 25;
  opts.debug_log = &log;
  const FrmpResult r = SolveFrmp(inst, pool, zero, opts);
  ASSERT_TRUE(r.lp.optimal());
  ASSERT_GE(r.accepted_values.size(), 2u);
  for (size_t i = 1; i < r.accepted_values.size(); ++i) {
    EXPECT_GE(r.accepted_values[i], r.accepted_values[i - 1] - 1e-12);
  }
  for (double s : r.step_lengths) EXPECT_GE(s, 1.0);
  EXPECT_NE(log.str().find("printed_ratio"), std::string::npos);
}

}  // namespace
}  // namespace famcg
