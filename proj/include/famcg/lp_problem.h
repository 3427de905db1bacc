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

#ifndef FAMCG_LP_PROBLEM_H_
#define FAMCG_LP_PROBLEM_H_

#include <chrono>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace famcg {

enum class RowSense { kGreaterEqual, kLessEqual };

// What a row or variable stands for in the master problem. kGeneric is for
// problems that do not come from a master problem (tests, debugging).
enum class RowKind { kCover, kPack, kGeneric };
enum class VarKind { kTheta, kBoxPlus, kBoxMinus, kArtificial, kGeneric };

struct LpRow {
  RowSense sense = RowSense::kGreaterEqual;
  double rhs = 0.0;
  RowKind kind = RowKind::kGeneric;
  int ref = -1;  // customer or facility index
};

struct LpVariable {
  double cost = 0.0;
  VarKind kind = VarKind::kGeneric;
  int ref = -1;  // column, customer, or -1
  // (row, coefficient) pairs with distinct rows.
  std::vector<std::pair<int, double>> entries;
};

// min c'x  s.t.  each row >= or <= rhs,  x >= 0.
class LpProblem {
 public:
  int AddRow(RowSense sense, double rhs, RowKind kind = RowKind::kGeneric,
             int ref = -1);
  // Throws std::invalid_argument when an entry names an unknown row.
  int AddVariable(double cost, std::vector<std::pair<int, double>> entries,
                  VarKind kind = VarKind::kGeneric, int ref = -1);

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_variables() const { return static_cast<int>(vars_.size()); }
  const LpRow& row(int i) const { return rows_[i]; }
  const LpVariable& variable(int j) const { return vars_[j]; }
  const std::vector<LpRow>& rows() const { return rows_; }
  const std::vector<LpVariable>& variables() const { return vars_; }

 private:
  std::vector<LpRow> rows_;
  std::vector<LpVariable> vars_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit, kNumericalError };

const char* LpStatusName(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kNumericalError;
  std::vector<double> x;          // one per variable
  std::vector<double> row_duals;  // >= 0 on >= rows, <= 0 on <= rows
  double objective = 0.0;
  int iterations = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Largest violation of a row or of x >= 0.
double PrimalResidual(const LpProblem& p, const std::vector<double>& x);
// Largest violation of dual feasibility: negative reduced cost or a row dual
// with the wrong sign.
double DualResidual(const LpProblem& p, const std::vector<double>& y);
// max over variables of |x_j * reduced_cost_j| and over rows of
// |y_i * row slack_i|.
double ComplementarySlacknessResidual(const LpProblem& p,
                                      const std::vector<double>& x,
                                      const std::vector<double>& y);
double DualObjective(const LpProblem& p, const std::vector<double>& y);

// CPLEX LP text format, for cross-checking with external solvers.
void WriteLpFormat(const LpProblem& p, std::ostream& out);

}  // namespace famcg

#endif  // FAMCG_LP_PROBLEM_H_
