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

#ifndef FAMCG_ENUMERATION_H_
#define FAMCG_ENUMERATION_H_

#include <cstdint>
#include <vector>

#include "famcg/column.h"
#include "famcg/instance.h"
#include "famcg/rmp.h"

namespace famcg {

// Every nonempty capacity-feasible column, by facility then by ascending
// subset bitmask. Throws std::length_error past max_columns or when there
// are more than 62 customers.
std::vector<Column> EnumerateColumns(const Instance& inst, int64_t max_columns);

struct MasterSolution {
  LpSolution lp;
  bool feasible = false;  // artificial usage below 1e-7
  int num_columns = 0;
};

// Master problem over every column, solved with the production simplex.
MasterSolution SolveFullMaster(const Instance& inst, int64_t max_columns);

}  // namespace famcg

#endif  // FAMCG_ENUMERATION_H_
