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

#ifndef FAMCG_VERIFY_H_
#define FAMCG_VERIFY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "famcg/column.h"
#include "famcg/instance.h"
#include "famcg/random.h"
#include "famcg/rmp.h"
#include "famcg/solvers.h"

namespace famcg {

// A random nonempty subset of cols with at most max_size members.
std::vector<Column> SamplePool(std::span<const Column> cols, int max_size, Xoshiro256& rng);
// Cover duals uniform in [0, 2 max c_fu + max c_f / 2); pack duals zero or
// uniform in [0, max c_f) with equal odds.
DualSolution SampleDual(const Instance& inst, Xoshiro256& rng);
// Box half-width uniform in [0.01, 0.01 + max c_fu).
double SampleNu(const Instance& inst, Xoshiro256& rng);

struct DominanceSample {
  double nu = 0.0;
  double psi_pool = 0.0;       // boxed LP value over the pool
  double psi_projected = 0.0;  // same box, projected pool
  int altered = 0;             // pool columns that projection shrank
};

// Boxed LP values over pool and over its projection at (center, nu), with the
// box of half-width nu around center.cover.
DominanceSample CompareProjection(const Instance& inst, std::span<const Column> pool,
                                  const DualSolution& center, double nu);

struct BoundSample {
  double lagrangian = 0.0;  // over every column
  double family = 0.0;      // over the families of the pool
};

BoundSample CompareBounds(const Instance& inst, std::span<const Column> pool,
                          const DualSolution& pi);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int64_t max_columns = 2000000;
  int dominance_samples = 100;
  int bound_samples = 1000;
  uint64_t seed = 1;
  SolverOptions solver;  // method overridden per check
};

// Enumerates the master problem and checks every method against it, then
// the projection dominance and the bound chain on sampled duals. Throws
// std::length_error when the enumeration cap is exceeded.
std::vector<CheckResult> VerifyInstance(const Instance& inst, const VerifyOptions& opts);

}  // namespace famcg

#endif  // FAMCG_VERIFY_H_
