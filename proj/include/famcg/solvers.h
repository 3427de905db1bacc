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

#ifndef FAMCG_SOLVERS_H_
#define FAMCG_SOLVERS_H_

#include <chrono>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "famcg/column.h"
#include "famcg/instance.h"
#include "famcg/pricing.h"
#include "famcg/rmp.h"

namespace famcg {

enum class Method { kPlain, kSmoothing, kBoxStep, kFamily };

// "plain", "smooth", "boxstep", "family".
const char* MethodName(Method method);
std::optional<Method> ParseMethod(std::string_view name);

struct SolverOptions {
  Method method = Method::kFamily;
  double nu = 0.1;              // box half-width
  double m_cap = 100.0;         // step multiplier when no dual limits it
  double eta_epsilon = 1e-5;
  int inner_cap = 10;           // coordinate ascent steps per outer iteration
  double rc_tolerance = -1e-7;
  int max_outer_iterations = 100000;
  double time_limit_seconds = std::numeric_limits<double>::infinity();
  double lambda_init = 0.9;
  double lambda_step = 0.1;
  std::optional<double> artificial_cost;  // default: DefaultArtificialCost
  // Receives one line per ascent step with both step-limit formulas.
  std::ostream* debug_log = nullptr;

  // Throws std::invalid_argument on out-of-range values.
  void Validate() const;
};

struct IterationRecord {
  int iter = 0;
  double rmp_obj = 0.0;
  double best_bound = 0.0;
  int n_columns = 0;
  int cols_added = 0;
  int inner_iters = 0;
  int misprices = 0;
  double lp_ms_cum = 0.0;
  double total_ms_cum = 0.0;
};

enum class Termination { kOptimal, kIterationLimit, kTimeLimit, kInfeasibleStart, kLpFailure };

const char* TerminationName(Termination t);

struct RunResult {
  Method method = Method::kPlain;
  Termination termination = Termination::kIterationLimit;
  double objective = 0.0;
  double bound = -std::numeric_limits<double>::infinity();
  // Columns with positive weight in the last LP.
  std::vector<std::pair<Column, double>> theta;
  std::vector<IterationRecord> trace;
  int num_columns = 0;
  // Priced columns below the tolerance whose key was already pooled.
  int duplicate_columns = 0;
  // Priced columns below the tolerance in total (new and duplicate).
  int priced_columns = 0;
  std::chrono::nanoseconds lp_time{0};
  std::chrono::nanoseconds total_time{0};
  DualSolution final_duals;

  int iterations() const { return static_cast<int>(trace.size()); }
  // |objective - bound| <= 1e-5 (1 + |objective|).
  bool GapClosed() const;
};

RunResult RunUnstabilized(const Instance& inst, const SolverOptions& opts);
RunResult RunSmoothing(const Instance& inst, const SolverOptions& opts);
RunResult RunBoxStep(const Instance& inst, const SolverOptions& opts);
RunResult RunFamilyCg(const Instance& inst, const SolverOptions& opts);
// Dispatches on opts.method.
RunResult RunMethod(const Instance& inst, const SolverOptions& opts);

enum class FrmpEnd { kOptimalBreak, kInnerCap };

struct FrmpResult {
  DualSolution pi_bar;          // dual of the last boxed solve
  LpSolution lp;                // primal over `columns`
  std::vector<Column> columns;  // projected pool of the last boxed solve
  FrmpEnd ended_by = FrmpEnd::kInnerCap;
  int iterations = 0;           // boxed solves
  DualSolution ascent_point;    // incumbent of the ascent when it stopped
  // Family bound at each accepted incumbent, starting with the input.
  std::vector<double> accepted_values;
  // eta * m for each accepted step; always >= 1.
  std::vector<double> step_lengths;
};

// Coordinate ascent on the family bound starting from pi0.
FrmpResult SolveFrmp(const Instance& inst, const ColumnPool& pool, const DualSolution& pi0,
                     const SolverOptions& opts);

// Largest m <= m_cap with pi0 + m * direction >= 0.
double MaxStep(const DualSolution& pi0, const DualSolution& direction, double m_cap);

}  // namespace famcg

#endif  // FAMCG_SOLVERS_H_
