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

#include "famcg/lp_problem.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace famcg {

int LpProblem::AddRow(RowSense sense, double rhs, RowKind kind, int ref) {
  rows_.push_back({sense, rhs, kind, ref});
  return num_rows() - 1;
}

int LpProblem::AddVariable(double cost, std::vector<std::pair<int, double>> entries,
                           VarKind kind, int ref) {
  for (const auto& [row, coef] : entries) {
    if (row < 0 || row >= num_rows()) {
      throw std::invalid_argument("LP variable references an unknown row");
    }
    (void)coef;
  }
  std::sort(entries.begin(), entries.end());
  vars_.push_back({cost, kind, ref, std::move(entries)});
  return num_variables() - 1;
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration_limit";
    case LpStatus::kNumericalError: return "numerical_error";
  }
  return "unknown";
}

namespace {

std::vector<double> RowActivity(const LpProblem& p, const std::vector<double>& x) {
  std::vector<double> activity(p.num_rows(), 0.0);
  for (int j = 0; j < p.num_variables(); ++j) {
    for (const auto& [row, coef] : p.variable(j).entries) activity[row] += coef * x[j];
  }
  return activity;
}

double ReducedCost(const LpProblem& p, const std::vector<double>& y, int j) {
  double d = p.variable(j).cost;
  for (const auto& [row, coef] : p.variable(j).entries) d -= coef * y[row];
  return d;
}

}  // namespace

double PrimalResidual(const LpProblem& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  const auto activity = RowActivity(p, x);
  for (int i = 0; i < p.num_rows(); ++i) {
    const double gap = p.row(i).sense == RowSense::kGreaterEqual
                           ? p.row(i).rhs - activity[i]
                           : activity[i] - p.row(i).rhs;
    worst = std::max(worst, gap);
  }
  return worst;
}

double DualResidual(const LpProblem& p, const std::vector<double>& y) {
  double worst = 0.0;
  for (int i = 0; i < p.num_rows(); ++i) {
    worst = std::max(worst, p.row(i).sense == RowSense::kGreaterEqual ? -y[i] : y[i]);
  }
  for (int j = 0; j < p.num_variables(); ++j) {
    worst = std::max(worst, -ReducedCost(p, y, j));
  }
  return worst;
}

double ComplementarySlacknessResidual(const LpProblem& p,
                                      const std::vector<double>& x,
                                      const std::vector<double>& y) {
  double worst = 0.0;
  for (int j = 0; j < p.num_variables(); ++j) {
    worst = std::max(worst, std::abs(x[j] * ReducedCost(p, y, j)));
  }
  const auto activity = RowActivity(p, x);
  for (int i = 0; i < p.num_rows(); ++i) {
    worst = std::max(worst, std::abs(y[i] * (activity[i] - p.row(i).rhs)));
  }
  return worst;
}

double DualObjective(const LpProblem& p, const std::vector<double>& y) {
  double obj = 0.0;
  for (int i = 0; i < p.num_rows(); ++i) obj += p.row(i).rhs * y[i];
  return obj;
}

namespace {

std::string RowName(const LpRow& row, int i) {
  switch (row.kind) {
    case RowKind::kCover: return "cover_" + std::to_string(row.ref);
    case RowKind::kPack: return "pack_" + std::to_string(row.ref);
    case RowKind::kGeneric: break;
  }
  return "r" + std::to_string(i);
}

std::string VarName(const LpVariable& var, int j) {
  switch (var.kind) {
    case VarKind::kTheta: return "theta_" + std::to_string(var.ref);
    case VarKind::kBoxPlus: return "dplus_" + std::to_string(var.ref);
    case VarKind::kBoxMinus: return "dminus_" + std::to_string(var.ref);
    case VarKind::kArtificial: return "art_" + std::to_string(var.ref);
    case VarKind::kGeneric: break;
  }
  return "x" + std::to_string(j);
}

void WriteTerm(std::ostream& out, double coef, const std::string& name, bool first) {
  if (coef < 0) {
    out << " - ";
  } else if (!first) {
    out << " + ";
  } else {
    out << " ";
  }
  out << std::abs(coef) << " " << name;
}

}  // namespace

void WriteLpFormat(const LpProblem& p, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << "\\ famcg LP dump\nMinimize\n obj:";
  bool first = true;
  for (int j = 0; j < p.num_variables(); ++j) {
    WriteTerm(out, p.variable(j).cost, VarName(p.variable(j), j), first);
    first = false;
  }
  if (first) out << " 0";
  out << "\nSubject To\n";
  std::vector<std::vector<std::pair<int, double>>> by_row(p.num_rows());
  for (int j = 0; j < p.num_variables(); ++j) {
    for (const auto& [row, coef] : p.variable(j).entries) by_row[row].push_back({j, coef});
  }
  for (int i = 0; i < p.num_rows(); ++i) {
    out << " " << RowName(p.row(i), i) << ":";
    first = true;
    for (const auto& [j, coef] : by_row[i]) {
      WriteTerm(out, coef, VarName(p.variable(j), j), first);
      first = false;
    }
    // An empty row still needs a left-hand side in LP format.
    if (first) out << " 0 " << (p.num_variables() ? VarName(p.variable(0), 0) : "x0");
    out << (p.row(i).sense == RowSense::kGreaterEqual ? " >= " : " <= ")
        << p.row(i).rhs << "\n";
  }
  out << "End\n";
  out.precision(old_precision);
}

}  // namespace famcg
