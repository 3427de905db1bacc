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

#include "famcg/pricing.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace famcg {

double ReducedCost(const Instance& /*inst*/, const Column& col, const DualSolution& pi) {
  double rc = col.cost + pi.pack[col.facility];
  for (int u : col.customers) rc -= pi.cover[u];
  return rc;
}

PricedColumn KnapsackPrice(const Instance& inst, int facility, const DualSolution& pi) {
  const int cap = inst.capacity(facility);
  std::vector<int> items;
  std::vector<double> profit;
  for (int u = 0; u < inst.num_customers(); ++u) {
    const double w = inst.assign_cost(facility, u) - pi.cover[u];
    if (w < 0.0 && inst.demand(u) <= cap) {
      items.push_back(u);
      profit.push_back(w);
    }
  }
  const size_t width = static_cast<size_t>(cap) + 1;
  std::vector<double> best(width, 0.0);
  std::vector<uint8_t> take(items.size() * width, 0);
  for (size_t i = 0; i < items.size(); ++i) {
    const int d = inst.demand(items[i]);
    uint8_t* row = &take[i * width];
    for (int k = cap; k >= d; --k) {
      const double cand = best[k - d] + profit[i];
      if (cand < best[k]) {
        best[k] = cand;
        row[k] = 1;
      }
    }
  }
  std::vector<int> chosen;
  int k = cap;
  for (size_t i = items.size(); i-- > 0;) {
    if (take[i * width + k]) {
      chosen.push_back(items[i]);
      k -= inst.demand(items[i]);
    }
  }
  std::reverse(chosen.begin(), chosen.end());

  PricedColumn out;
  double value = inst.open_cost(facility) + pi.pack[facility];
  for (int u : chosen) value += inst.assign_cost(facility, u) - pi.cover[u];
  out.reduced_cost = value;
  out.column = MakeColumn(inst, facility, std::move(chosen));
  return out;
}

PricingResult PriceAll(const Instance& inst, const ColumnPool& pool,
                       const DualSolution& pi, double rc_tolerance) {
  PricingResult result;
  const int nf = inst.num_facilities();
  result.best.reserve(nf);
  result.facility_min.reserve(nf);
  result.min_reduced_cost = std::numeric_limits<double>::infinity();
  for (int f = 0; f < nf; ++f) {
    PricedColumn priced = KnapsackPrice(inst, f, pi);
    result.facility_min.push_back(priced.reduced_cost);
    result.min_reduced_cost = std::min(result.min_reduced_cost, priced.reduced_cost);
    if (priced.reduced_cost < rc_tolerance) {
      if (pool.Contains(priced.column)) {
        ++result.duplicates;
      } else {
        result.new_columns.push_back(priced.column);
      }
    }
    result.best.push_back(std::move(priced));
  }
  return result;
}

Column ProjectColumn(const Instance& inst, const Column& col, const DualSolution& pi,
                     double nu) {
  Column out;
  out.facility = col.facility;
  out.cost = inst.open_cost(col.facility);
  for (int u : col.customers) {
    const double c = inst.assign_cost(col.facility, u);
    if (c < pi.cover[u] + nu) {
      out.customers.push_back(u);
      out.cost += c;
    }
  }
  return out;
}

ProjectedPool ProjectPool(const Instance& inst, std::span<const Column> pool,
                          const DualSolution& pi, double nu) {
  ProjectedPool out;
  out.source_to_projected.reserve(pool.size());
  std::unordered_map<ColumnKey, int, ColumnKeyHash> seen;
  for (const Column& col : pool) {
    Column projected = ProjectColumn(inst, col, pi, nu);
    ColumnKey key = KeyOf(projected);
    auto [it, inserted] = seen.emplace(std::move(key), static_cast<int>(out.columns.size()));
    if (inserted) out.columns.push_back(std::move(projected));
    out.source_to_projected.push_back(it->second);
  }
  return out;
}

double FamilyMinReducedCost(const Instance& inst, const Column& col,
                            const DualSolution& pi) {
  double value = inst.open_cost(col.facility) + pi.pack[col.facility];
  for (int u : col.customers) {
    value += std::min(0.0, inst.assign_cost(col.facility, u) - pi.cover[u]);
  }
  return value;
}

double LagrangianBound(const Instance& inst, const DualSolution& pi,
                       std::span<const double> facility_min) {
  double bound = pi.Objective();
  for (int f = 0; f < inst.num_facilities(); ++f) {
    bound += std::min(0.0, facility_min[f]);
  }
  return bound;
}

FamilyBound FamilyLagrangianBound(const Instance& inst, const ColumnPool& pool,
                                  const DualSolution& pi) {
  FamilyBound out;
  out.column_min.resize(pool.size());
  out.value = pi.Objective();
  for (int f = 0; f < inst.num_facilities(); ++f) {
    double facility_term = 0.0;
    for (int l : pool.ForFacility(f)) {
      out.column_min[l] = FamilyMinReducedCost(inst, pool[l], pi);
      facility_term = std::min(facility_term, out.column_min[l]);
    }
    out.value += facility_term;
  }
  return out;
}

double FamilyLagrangianValue(const Instance& inst, const ColumnPool& pool,
                             const DualSolution& pi) {
  double value = pi.Objective();
  for (int f = 0; f < inst.num_facilities(); ++f) {
    double facility_term = 0.0;
    for (int l : pool.ForFacility(f)) {
      facility_term = std::min(facility_term, FamilyMinReducedCost(inst, pool[l], pi));
    }
    value += facility_term;
  }
  return value;
}

DualSolution ProjectDualFeasible(const Instance& inst, const DualSolution& pi,
                                 std::span<const double> facility_min) {
  DualSolution out = pi;
  for (int f = 0; f < inst.num_facilities(); ++f) {
    out.pack[f] -= std::min(0.0, facility_min[f]);
  }
  return out;
}

}  // namespace famcg
