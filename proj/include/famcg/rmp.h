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

#ifndef FAMCG_RMP_H_
#define FAMCG_RMP_H_

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "famcg/column.h"
#include "famcg/instance.h"
#include "famcg/lp_problem.h"

namespace famcg {

// Cover duals (one per customer) and pack duals (one per facility). The dual
// objective is sum(cover) - sum(pack).
struct DualSolution {
  std::vector<double> cover;
  std::vector<double> pack;

  static DualSolution Zero(const Instance& inst);

  double Objective() const;
  bool operator==(const DualSolution&) const = default;
};

// Bounds on the cover duals: lower <= pi_u <= upper, with upper >= lower >= 0.
struct Box {
  std::vector<double> upper;
  std::vector<double> lower;

  // upper = center + half_width, lower = max(0, center - half_width).
  static Box Around(std::span<const double> center, double half_width);
  // Throws std::invalid_argument unless upper >= lower >= 0 everywhere.
  void Validate() const;
};

struct LpSolution {
  LpStatus status = LpStatus::kNumericalError;
  std::vector<double> theta;  // one per column passed in
  std::vector<double> delta_plus;
  std::vector<double> delta_minus;
  std::vector<double> artificial_usage;
  DualSolution duals;
  double objective = 0.0;
  std::chrono::nanoseconds lp_time{0};
  int simplex_iterations = 0;

  bool optimal() const { return status == LpStatus::kOptimal; }
  double TotalArtificialUsage() const;
  double MaxBoxSlack() const;
};

// 2 * (max_f c_f + n_customers * max_{f,u} c_fu): more than any column can
// cost, so artificials stay out of an optimal basis whenever the columns
// cover every customer.
double DefaultArtificialCost(const Instance& inst);

// Cover rows (>= 1 per customer) and pack rows (<= 1 per facility) over
// cols, plus one artificial per cover row at artificial_cost.
LpProblem BuildRmp(const Instance& inst, std::span<const Column> cols,
                   double artificial_cost);
// The boxed primal: box slack delta+ at cost upper, delta- at reward lower.
// delta- is left out where lower == 0.
LpProblem BuildBoxedRmp(const Instance& inst, std::span<const Column> cols,
                        const Box& box);

// Solves the restricted master problem. Pack duals are reported as
// nonnegative prices (the negated row duals). Nonoptimal LP statuses are
// returned in the solution, not thrown.
LpSolution SolveRmp(const Instance& inst, std::span<const Column> cols,
                    std::optional<double> artificial_cost = std::nullopt);
LpSolution SolveRmp(const ColumnPool& pool,
                    std::optional<double> artificial_cost = std::nullopt);

// Solves the restricted master with the cover duals boxed. The returned cover
// duals are clamped into the box.
LpSolution SolveBoxedRmp(const Instance& inst, std::span<const Column> cols,
                         const Box& box);

// Converts raw simplex output on a problem from BuildRmp/BuildBoxedRmp.
LpSolution ExtractSolution(const Instance& inst, const LpProblem& problem,
                           const LpResult& result, int num_columns);

}  // namespace famcg

#endif  // FAMCG_RMP_H_
