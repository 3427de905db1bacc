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

#include "famcg/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "famcg/enumeration.h"
#include "famcg/pricing.h"

namespace famcg {

std::vector<Column> SamplePool(std::span<const Column> cols, int max_size, Xoshiro256& rng) {
  std::vector<int> order(cols.size());
  std::iota(order.begin(), order.end(), 0);
  const int limit = std::min<int>(max_size, static_cast<int>(cols.size()));
  const int size = 1 + static_cast<int>(rng.UniformBelow(limit));
  // Partial Fisher-Yates.
  std::vector<Column> out;
  for (int i = 0; i < size; ++i) {
    const int j = i + static_cast<int>(rng.UniformBelow(order.size() - i));
    std::swap(order[i], order[j]);
    out.push_back(cols[order[i]]);
  }
  return out;
}

DualSolution SampleDual(const Instance& inst, Xoshiro256& rng) {
  DualSolution pi = DualSolution::Zero(inst);
  const double cover_scale = 2.0 * inst.max_assign_cost() + 0.5 * inst.max_open_cost();
  for (double& v : pi.cover) v = cover_scale * rng.UniformDouble();
  for (double& v : pi.pack) {
    const double draw = inst.max_open_cost() * rng.UniformDouble();
    v = rng.UniformBelow(2) == 0 ? 0.0 : draw;
  }
  return pi;
}

double SampleNu(const Instance& inst, Xoshiro256& rng) {
  return 0.01 + inst.max_assign_cost() * rng.UniformDouble();
}

DominanceSample CompareProjection(const Instance& inst, std::span<const Column> pool,
                                  const DualSolution& center, double nu) {
  DominanceSample out;
  out.nu = nu;
  const Box box = Box::Around(center.cover, nu);
  const LpSolution full = SolveBoxedRmp(inst, pool, box);
  const ProjectedPool projected = ProjectPool(inst, pool, center, nu);
  for (size_t l = 0; l < pool.size(); ++l) {
    const Column& image = projected.columns[projected.source_to_projected[l]];
    if (image.customers.size() != pool[l].customers.size()) ++out.altered;
  }
  const LpSolution proj = SolveBoxedRmp(inst, projected.columns, box);
  if (!full.optimal() || !proj.optimal()) {
    throw std::runtime_error("boxed LP did not solve to optimality");
  }
  out.psi_pool = full.objective;
  out.psi_projected = proj.objective;
  return out;
}

BoundSample CompareBounds(const Instance& inst, std::span<const Column> pool,
                          const DualSolution& pi) {
  ColumnPool cp(inst);
  for (const Column& col : pool) cp.Insert(col);
  BoundSample out;
  const PricingResult pr = PriceAll(inst, cp, pi);
  out.lagrangian = LagrangianBound(inst, pi, pr.facility_min);
  out.family = FamilyLagrangianValue(inst, cp, pi);
  return out;
}

namespace {

std::string Format(const char* fmt, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

}  // namespace

std::vector<CheckResult> VerifyInstance(const Instance& inst, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::vector<Column> all = EnumerateColumns(inst, opts.max_columns);
  const LpSolution master = SolveRmp(inst, all);
  const bool feasible = master.optimal() && master.TotalArtificialUsage() < 1e-7;
  out.push_back({"master problem feasible", feasible,
                 Format("objective %.10g, artificial usage %.3g", master.objective,
                        master.TotalArtificialUsage())});
  if (!feasible) return out;
  const double mp = master.objective;

  for (Method method : {Method::kPlain, Method::kSmoothing, Method::kBoxStep,
                        Method::kFamily}) {
    SolverOptions so = opts.solver;
    so.method = method;
    const RunResult run = RunMethod(inst, so);
    const bool ok = run.termination == Termination::kOptimal &&
                    std::abs(run.objective - mp) <= 1e-6;
    out.push_back({std::string("method ") + MethodName(method) + " matches master", ok,
                   std::string(TerminationName(run.termination)) +
                       Format(", objective %.10g vs %.10g", run.objective, mp)});
  }

  Xoshiro256 rng(opts.seed);
  const int pool_cap = std::max(1, 3 * inst.num_customers());
  double worst = std::numeric_limits<double>::infinity();
  int failures = 0;
  for (int s = 0; s < opts.dominance_samples; ++s) {
    const std::vector<Column> pool = SamplePool(all, pool_cap, rng);
    const DualSolution center = SampleDual(inst, rng);
    const double nu = SampleNu(inst, rng);
    const DominanceSample d = CompareProjection(inst, pool, center, nu);
    const double margin = d.psi_pool - d.psi_projected;
    worst = std::min(worst, margin);
    if (margin < -1e-8) ++failures;
  }
  out.push_back({"projection dominance", failures == 0,
                 Format("%.0f failing samples, worst margin %.3g", failures, worst)});

  int family_failures = 0;
  int master_failures = 0;
  for (int s = 0; s < opts.bound_samples; ++s) {
    const std::vector<Column> pool = SamplePool(all, pool_cap, rng);
    const DualSolution pi = SampleDual(inst, rng);
    const BoundSample b = CompareBounds(inst, pool, pi);
    if (b.lagrangian > b.family + 1e-9) ++family_failures;
    if (b.lagrangian > mp + 1e-9) ++master_failures;
  }
  out.push_back({"bound below family bound", family_failures == 0,
                 Format("%.0f of %.0f samples fail", family_failures, opts.bound_samples)});
  out.push_back({"bound below master", master_failures == 0,
                 Format("%.0f of %.0f samples fail", master_failures, opts.bound_samples)});
  return out;
}

}  // namespace famcg
