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

namespace famcg {

std::vector<Column> EnumerateColumns(const Instance& inst, int64_t max_columns) {
  const int nc = inst.num_customers();
  if (nc > 62) throw std::length_error("too many customers to enumerate");
  std::vector<Column> out;
  const uint64_t subsets = uint64_t{1} << nc;
  for (int f = 0; f < inst.num_facilities(); ++f) {
    for (uint64_t mask = 1; mask < subsets; ++mask) {
      int load = 0;
      std::vector<int> members;
      for (int u = 0; u < nc && load <= inst.capacity(f); ++u) {
        if (mask >> u & 1) {
          load += inst.demand(u);
          members.push_back(u);
        }
      }
      if (load > inst.capacity(f)) continue;
      if (static_cast<int64_t>(out.size()) >= max_columns) {
        throw std::length_error("column enumeration exceeds the cap");
      }
      out.push_back(MakeColumn(inst, f, std::move(members)));
    }
  }
  return out;
}

MasterSolution SolveFullMaster(const Instance& inst, int64_t max_columns) {
  MasterSolution out;
  const std::vector<Column> cols = EnumerateColumns(inst, max_columns);
  out.num_columns = static_cast<int>(cols.size());
  out.lp = SolveRmp(inst, cols);
  out.feasible = out.lp.optimal() && out.lp.TotalArtificialUsage() < 1e-7;
  return out;
}

}  // namespace famcg
