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

#ifndef FAMCG_SIMPLEX_H_
#define FAMCG_SIMPLEX_H_

#include "famcg/lp_problem.h"

namespace famcg {

struct SimplexOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-9;
  // Pivots between refactorizations of the dense basis inverse.
  int refactor_interval = 64;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_limit = 50;
  // 0 picks a limit proportional to the problem size.
  int max_iterations = 0;
};

// Two-phase primal simplex on a dense explicit basis inverse. The starting
// basis uses row slacks where they are feasible, then singleton columns
// (such as box slacks or artificial cover variables) that satisfy the row
// on their own, and phase 1 artificials only for what remains.
LpResult SolveLp(const LpProblem& problem, const SimplexOptions& options = {});

}  // namespace famcg

#endif  // FAMCG_SIMPLEX_H_
