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

// Test-only textbook LP solver: full tableau, two phases, Bland's rule.
// Deliberately shares no code with the production simplex.

#ifndef FAMCG_TESTS_ORACLES_TABLEAU_SIMPLEX_H_
#define FAMCG_TESTS_ORACLES_TABLEAU_SIMPLEX_H_

#include <cmath>
#include <vector>

namespace oracle {

enum class Sense { kLe, kGe, kEq };

struct DenseLp {
  std::vector<double> cost;             // n
  std::vector<std::vector<double>> a;   // m x n
  std::vector<Sense> sense;             // m
  std::vector<double> rhs;              // m
};

enum class Outcome { kOptimal, kInfeasible, kUnbounded };

struct DenseSolution {
  Outcome outcome = Outcome::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
};

// min c'x s.t. a x (sense) rhs, x >= 0.
inline DenseSolution SolveTableau(const DenseLp& lp) {
  constexpr double kEps = 1e-11;
  const int m = static_cast<int>(lp.rhs.size());
  const int n = static_cast<int>(lp.cost.size());
  // Columns: originals, one slack per inequality, one artificial per row.
  std::vector<int> slack_of(m, -1);
  int cols = n;
  for (int i = 0; i < m; ++i) {
    if (lp.sense[i] != Sense::kEq) slack_of[i] = cols++;
  }
  const int first_art = cols;
  cols += m;
  const int width = cols + 1;  // last column is the rhs
  std::vector<std::vector<double>> t(m, std::vector<double>(width, 0.0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    double sign = lp.rhs[i] < 0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) t[i][j] = sign * lp.a[i][j];
    if (slack_of[i] >= 0) {
      t[i][slack_of[i]] = sign * (lp.sense[i] == Sense::kLe ? 1.0 : -1.0);
    }
    t[i][first_art + i] = 1.0;
    t[i][cols] = sign * lp.rhs[i];
    basis[i] = first_art + i;
  }

  auto pivot = [&](int r, int c) {
    const double p = t[r][c];
    for (double& v : t[r]) v /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || t[i][c] == 0.0) continue;
      const double f = t[i][c];
      for (int j = 0; j < width; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  };

  // Runs Bland's rule on costs c over the allowed columns. Returns false
  // when unbounded.
  auto run = [&](const std::vector<double>& c, int allowed) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < allowed && enter < 0; ++j) {
        double d = c[j];
        for (int i = 0; i < m; ++i) d -= c[basis[i]] * t[i][j];
        if (d < -1e-9) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m; ++i) {
        if (t[i][enter] > kEps) {
          const double ratio = t[i][cols] / t[i][enter];
          if (leave < 0 || ratio < best - 1e-12 ||
              (std::abs(ratio - best) <= 1e-12 && basis[i] < basis[leave])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  };

  DenseSolution out;
  std::vector<double> phase1(cols, 0.0);
  for (int i = 0; i < m; ++i) phase1[first_art + i] = 1.0;
  run(phase1, cols);
  double infeasibility = 0.0;
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= first_art) infeasibility += t[i][cols];
  }
  if (infeasibility > 1e-8) return out;
  // Drive remaining zero-level artificials out where possible.
  for (int i = 0; i < m; ++i) {
    if (basis[i] < first_art) continue;
    for (int j = 0; j < first_art; ++j) {
      if (std::abs(t[i][j]) > 1e-9) {
        pivot(i, j);
        break;
      }
    }
  }
  std::vector<double> phase2(cols, 0.0);
  for (int j = 0; j < n; ++j) phase2[j] = lp.cost[j];
  if (!run(phase2, first_art)) {
    out.outcome = Outcome::kUnbounded;
    return out;
  }
  out.outcome = Outcome::kOptimal;
  out.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) out.x[basis[i]] = t[i][cols];
  }
  for (int j = 0; j < n; ++j) out.objective += lp.cost[j] * out.x[j];
  return out;
}

}  // namespace oracle

#endif  // FAMCG_TESTS_ORACLES_TABLEAU_SIMPLEX_H_
