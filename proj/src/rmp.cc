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

#include "famcg/rmp.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "famcg/simplex.h"

namespace famcg {

DualSolution DualSolution::Zero(const Instance& inst) {
  return {std::vector<double>(inst.num_customers(), 0.0),
          std::vector<double>(inst.num_facilities(), 0.0)};
}

double DualSolution::Objective() const {
  return std::accumulate(cover.begin(), cover.end(), 0.0) -
         std::accumulate(pack.begin(), pack.end(), 0.0);
}

Box Box::Around(std::span<const double> center, double half_width) {
  Box box;
  box.upper.reserve(center.size());
  box.lower.reserve(center.size());
  for (double c : center) {
    box.upper.push_back(c + half_width);
    box.lower.push_back(std::max(0.0, c - half_width));
  }
  return box;
}

void Box::Validate() const {
  if (upper.size() != lower.size()) throw std::invalid_argument("box size mismatch");
  for (size_t u = 0; u < upper.size(); ++u) {
    if (!(lower[u] >= 0.0) || !(upper[u] >= lower[u])) {
      throw std::invalid_argument("box requires upper >= lower >= 0");
    }
  }
}

double LpSolution::TotalArtificialUsage() const {
  return std::accumulate(artificial_usage.begin(), artificial_usage.end(), 0.0);
}

double LpSolution::MaxBoxSlack() const {
  double worst = 0.0;
  for (double d : delta_plus) worst = std::max(worst, d);
  for (double d : delta_minus) worst = std::max(worst, d);
  return worst;
}

double DefaultArtificialCost(const Instance& inst) {
  return 2.0 * (inst.max_open_cost() + inst.num_customers() * inst.max_assign_cost());
}

namespace {

// Rows 0..nc-1 are cover rows, nc..nc+nf-1 pack rows.
LpProblem MasterSkeleton(const Instance& inst, std::span<const Column> cols) {
  LpProblem p;
  const int nc = inst.num_customers();
  for (int u = 0; u < nc; ++u) p.AddRow(RowSense::kGreaterEqual, 1.0, RowKind::kCover, u);
  for (int f = 0; f < inst.num_facilities(); ++f) {
    p.AddRow(RowSense::kLessEqual, 1.0, RowKind::kPack, f);
  }
  for (size_t l = 0; l < cols.size(); ++l) {
    const Column& col = cols[l];
    std::vector<std::pair<int, double>> entries;
    entries.reserve(col.customers.size() + 1);
    for (int u : col.customers) entries.push_back({u, 1.0});
    entries.push_back({nc + col.facility, 1.0});
    p.AddVariable(col.cost, std::move(entries), VarKind::kTheta, static_cast<int>(l));
  }
  return p;
}

}  // namespace

LpProblem BuildRmp(const Instance& inst, std::span<const Column> cols,
                   double artificial_cost) {
  LpProblem p = MasterSkeleton(inst, cols);
  for (int u = 0; u < inst.num_customers(); ++u) {
    p.AddVariable(artificial_cost, {{u, 1.0}}, VarKind::kArtificial, u);
  }
  return p;
}

LpProblem BuildBoxedRmp(const Instance& inst, std::span<const Column> cols,
                        const Box& box) {
  box.Validate();
  if (static_cast<int>(box.upper.size()) != inst.num_customers()) {
    throw std::invalid_argument("box size differs from customer count");
  }
  LpProblem p = MasterSkeleton(inst, cols);
  for (int u = 0; u < inst.num_customers(); ++u) {
    p.AddVariable(box.upper[u], {{u, 1.0}}, VarKind::kBoxPlus, u);
    if (box.lower[u] > 0.0) {
      p.AddVariable(-box.lower[u], {{u, -1.0}}, VarKind::kBoxMinus, u);
    }
  }
  return p;
}

LpSolution ExtractSolution(const Instance& inst, const LpProblem& problem,
                           const LpResult& result, int num_columns) {
  LpSolution sol;
  sol.status = result.status;
  sol.lp_time = result.elapsed;
  sol.simplex_iterations = result.iterations;
  const int nc = inst.num_customers();
  const int nf = inst.num_facilities();
  sol.theta.assign(num_columns, 0.0);
  sol.delta_plus.assign(nc, 0.0);
  sol.delta_minus.assign(nc, 0.0);
  sol.artificial_usage.assign(nc, 0.0);
  sol.duals = DualSolution::Zero(inst);
  if (!result.x.empty()) {
    for (int j = 0; j < problem.num_variables(); ++j) {
      const LpVariable& v = problem.variable(j);
      const double x = result.x[j];
      switch (v.kind) {
        case VarKind::kTheta: sol.theta[v.ref] = x; break;
        case VarKind::kBoxPlus: sol.delta_plus[v.ref] = x; break;
        case VarKind::kBoxMinus: sol.delta_minus[v.ref] = x; break;
        case VarKind::kArtificial: sol.artificial_usage[v.ref] = x; break;
        case VarKind::kGeneric: break;
      }
    }
  }
  if (!result.row_duals.empty()) {
    for (int u = 0; u < nc; ++u) sol.duals.cover[u] = std::max(0.0, result.row_duals[u]);
    for (int f = 0; f < nf; ++f) sol.duals.pack[f] = std::max(0.0, -result.row_duals[nc + f]);
  }
  sol.objective = result.objective;
  return sol;
}

LpSolution SolveRmp(const Instance& inst, std::span<const Column> cols,
                    std::optional<double> artificial_cost) {
  const double cost = artificial_cost.value_or(DefaultArtificialCost(inst));
  const LpProblem p = BuildRmp(inst, cols, cost);
  return ExtractSolution(inst, p, SolveLp(p), static_cast<int>(cols.size()));
}

LpSolution SolveRmp(const ColumnPool& pool, std::optional<double> artificial_cost) {
  return SolveRmp(pool.instance(), pool.columns(), artificial_cost);
}

LpSolution SolveBoxedRmp(const Instance& inst, std::span<const Column> cols,
                         const Box& box) {
  const LpProblem p = BuildBoxedRmp(inst, cols, box);
  LpSolution sol = ExtractSolution(inst, p, SolveLp(p), static_cast<int>(cols.size()));
  if (sol.optimal()) {
    for (int u = 0; u < inst.num_customers(); ++u) {
      sol.duals.cover[u] = std::clamp(sol.duals.cover[u], box.lower[u], box.upper[u]);
    }
  }
  return sol;
}

}  // namespace famcg
