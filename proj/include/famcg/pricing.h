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

#ifndef FAMCG_PRICING_H_
#define FAMCG_PRICING_H_

#include <span>
#include <vector>

#include "famcg/column.h"
#include "famcg/instance.h"
#include "famcg/rmp.h"

namespace famcg {

// c_l + pi_f - sum_{u in l} pi_u.
double ReducedCost(const Instance& inst, const Column& col, const DualSolution& pi);

struct PricedColumn {
  Column column;
  double reduced_cost = 0.0;
};

// Minimum reduced cost column of facility f by a 0-1 knapsack DP over the
// integer capacity. Only customers with c_fu - pi_u < 0 are candidates, and
// an item is taken only on strict improvement. The reported value is
// c_f + pi_f + sum over the chosen customers (ascending) of (c_fu - pi_u).
PricedColumn KnapsackPrice(const Instance& inst, int facility, const DualSolution& pi);

struct PricingResult {
  std::vector<PricedColumn> best;     // one per facility
  std::vector<double> facility_min;   // best[f].reduced_cost
  double min_reduced_cost = 0.0;
  // Columns pricing below the tolerance that are not yet in the pool.
  std::vector<Column> new_columns;
  // Columns pricing below the tolerance that the pool already holds.
  int duplicates = 0;
};

// Prices every facility. Results are ordered by facility index.
PricingResult PriceAll(const Instance& inst, const ColumnPool& pool,
                       const DualSolution& pi, double rc_tolerance = -1e-7);

// Family member of col with least reduced cost when every cover dual is
// raised by nu: keeps customer u iff c_fu < pi_u + nu.
Column ProjectColumn(const Instance& inst, const Column& col, const DualSolution& pi,
                     double nu);

struct ProjectedPool {
  std::vector<Column> columns;      // deduplicated by key
  std::vector<int> source_to_projected;  // per pool column
};

ProjectedPool ProjectPool(const Instance& inst, std::span<const Column> pool,
                          const DualSolution& pi, double nu);

// Least reduced cost over the family (all customer subsets) of col:
// c_f + pi_f + sum_{u in col} min(0, c_fu - pi_u).
double FamilyMinReducedCost(const Instance& inst, const Column& col,
                            const DualSolution& pi);

// sum(pi_u) - sum(pi_f) + sum_f min(0, facility_min[f]).
double LagrangianBound(const Instance& inst, const DualSolution& pi,
                       std::span<const double> facility_min);

struct FamilyBound {
  double value = 0.0;
  std::vector<double> column_min;  // per pool column
};

// Lagrangian bound restricted to the families of the pool columns. A facility
// without pool columns contributes 0.
FamilyBound FamilyLagrangianBound(const Instance& inst, const ColumnPool& pool,
                                  const DualSolution& pi);
// Same value without the per-column detail.
double FamilyLagrangianValue(const Instance& inst, const ColumnPool& pool,
                             const DualSolution& pi);

// Raises each pack dual by the facility's most negative reduced cost,
// pi_f <- pi_f - min(0, facility_min[f]). The result is feasible for the dual
// master problem over every column and its objective is the Lagrangian bound
// at pi. Pack duals only grow, so nonnegativity is preserved.
DualSolution ProjectDualFeasible(const Instance& inst, const DualSolution& pi,
                                 std::span<const double> facility_min);

}  // namespace famcg

#endif  // FAMCG_PRICING_H_
