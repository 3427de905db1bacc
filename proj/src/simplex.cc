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

#include "famcg/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace famcg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class DenseSimplex {
 public:
  DenseSimplex(const LpProblem& p, const SimplexOptions& opts)
      : p_(p), opts_(opts), m_(p.num_rows()), n_(p.num_variables()) {}

  LpResult Solve();

 private:
  enum class Origin { kStructural, kSlack, kArtificial };

  struct Var {
    Origin origin;
    double cost;
    std::vector<std::pair<int, double>> entries;
  };

  void BuildColumns();
  void CrashBasis();
  bool Refactor();
  void ComputeDuals(const std::vector<double>& cost, std::vector<double>& y) const;
  double Reduced(const std::vector<double>& cost, const std::vector<double>& y,
                 int j) const;
  // Returns the terminal status of the phase.
  LpStatus RunPhase(const std::vector<double>& cost, bool barred_artificials);
  int ChooseEntering(const std::vector<double>& cost, const std::vector<double>& y,
                     bool bland, bool barred_artificials) const;
  int ChooseLeaving(const std::vector<double>& alpha, bool bland,
                    bool barred_artificials) const;
  void Pivot(int row, int entering, const std::vector<double>& alpha, double step);

  const LpProblem& p_;
  const SimplexOptions& opts_;
  const int m_;
  const int n_;
  std::vector<Var> vars_;
  std::vector<double> rhs_;
  std::vector<int> basis_;        // basic variable per row
  std::vector<int> basis_pos_;    // row of a basic variable, -1 otherwise
  std::vector<double> binv_;      // m x m row major
  std::vector<double> x_basic_;
  int since_refactor_ = 0;
  int iterations_ = 0;
  int iteration_limit_ = 0;
  bool has_artificials_ = false;
};

void DenseSimplex::BuildColumns() {
  vars_.reserve(n_ + m_);
  for (int j = 0; j < n_; ++j) {
    vars_.push_back({Origin::kStructural, p_.variable(j).cost, p_.variable(j).entries});
  }
  for (int i = 0; i < m_; ++i) {
    const double sign = p_.row(i).sense == RowSense::kGreaterEqual ? -1.0 : 1.0;
    vars_.push_back({Origin::kSlack, 0.0, {{i, sign}}});
  }
  rhs_.resize(m_);
  for (int i = 0; i < m_; ++i) rhs_[i] = p_.row(i).rhs;
}

void DenseSimplex::CrashBasis() {
  basis_.assign(m_, -1);
  // Best singleton structural column per row: nonnegative value, least cost.
  std::vector<int> singleton(m_, -1);
  std::vector<double> singleton_cost(m_, kInf);
  for (int j = 0; j < n_; ++j) {
    const auto& e = vars_[j].entries;
    if (e.size() != 1) continue;
    const auto [row, coef] = e[0];
    if (std::abs(coef) < 1e-12) continue;
    const double value = rhs_[row] / coef;
    if (value < 0.0) continue;
    const double total = vars_[j].cost * value;
    if (total < singleton_cost[row]) {
      singleton_cost[row] = total;
      singleton[row] = j;
    }
  }
  for (int i = 0; i < m_; ++i) {
    const double slack_coef = vars_[n_ + i].entries[0].second;
    if (rhs_[i] / slack_coef >= 0.0) {
      basis_[i] = n_ + i;
    } else if (singleton[i] >= 0) {
      basis_[i] = singleton[i];
    } else {
      const double sign = rhs_[i] >= 0.0 ? 1.0 : -1.0;
      vars_.push_back({Origin::kArtificial, 0.0, {{i, sign}}});
      basis_[i] = static_cast<int>(vars_.size()) - 1;
      has_artificials_ = true;
    }
  }
  basis_pos_.assign(vars_.size(), -1);
  for (int i = 0; i < m_; ++i) basis_pos_[basis_[i]] = i;
}

// Gauss-Jordan with partial pivoting on the current basis matrix.
bool DenseSimplex::Refactor() {
  std::vector<double> b(static_cast<size_t>(m_) * m_, 0.0);
  for (int k = 0; k < m_; ++k) {
    for (const auto& [row, coef] : vars_[basis_[k]].entries) {
      b[static_cast<size_t>(row) * m_ + k] = coef;
    }
  }
  binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
  for (int i = 0; i < m_; ++i) binv_[static_cast<size_t>(i) * m_ + i] = 1.0;
  for (int col = 0; col < m_; ++col) {
    int piv = col;
    double best = std::abs(b[static_cast<size_t>(col) * m_ + col]);
    for (int r = col + 1; r < m_; ++r) {
      const double v = std::abs(b[static_cast<size_t>(r) * m_ + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-12) return false;
    if (piv != col) {
      for (int c = 0; c < m_; ++c) {
        std::swap(b[static_cast<size_t>(piv) * m_ + c], b[static_cast<size_t>(col) * m_ + c]);
        std::swap(binv_[static_cast<size_t>(piv) * m_ + c],
                  binv_[static_cast<size_t>(col) * m_ + c]);
      }
    }
    const double inv = 1.0 / b[static_cast<size_t>(col) * m_ + col];
    double* brow = &b[static_cast<size_t>(col) * m_];
    double* irow = &binv_[static_cast<size_t>(col) * m_];
    for (int c = 0; c < m_; ++c) {
      brow[c] *= inv;
      irow[c] *= inv;
    }
    for (int r = 0; r < m_; ++r) {
      if (r == col) continue;
      const double factor = b[static_cast<size_t>(r) * m_ + col];
      if (factor == 0.0) continue;
      double* br = &b[static_cast<size_t>(r) * m_];
      double* ir = &binv_[static_cast<size_t>(r) * m_];
      for (int c = 0; c < m_; ++c) {
        br[c] -= factor * brow[c];
        ir[c] -= factor * irow[c];
      }
    }
  }
  // Row k of B^-1 now belongs to the basic variable of column k of B, which
  // is basis_[k]; x_B = B^-1 b.
  x_basic_.assign(m_, 0.0);
  for (int k = 0; k < m_; ++k) {
    const double* irow = &binv_[static_cast<size_t>(k) * m_];
    double v = 0.0;
    for (int c = 0; c < m_; ++c) v += irow[c] * rhs_[c];
    x_basic_[k] = v;
  }
  since_refactor_ = 0;
  return true;
}

void DenseSimplex::ComputeDuals(const std::vector<double>& cost,
                                std::vector<double>& y) const {
  y.assign(m_, 0.0);
  for (int k = 0; k < m_; ++k) {
    const double cb = cost[basis_[k]];
    if (cb == 0.0) continue;
    const double* irow = &binv_[static_cast<size_t>(k) * m_];
    for (int c = 0; c < m_; ++c) y[c] += cb * irow[c];
  }
}

double DenseSimplex::Reduced(const std::vector<double>& cost,
                             const std::vector<double>& y, int j) const {
  double d = cost[j];
  for (const auto& [row, coef] : vars_[j].entries) d -= coef * y[row];
  return d;
}

int DenseSimplex::ChooseEntering(const std::vector<double>& cost,
                                 const std::vector<double>& y, bool bland,
                                 bool barred_artificials) const {
  int best = -1;
  double best_d = -opts_.optimality_tol;
  const int total = static_cast<int>(vars_.size());
  for (int j = 0; j < total; ++j) {
    if (basis_pos_[j] >= 0) continue;
    if (barred_artificials && vars_[j].origin == Origin::kArtificial) continue;
    const double d = Reduced(cost, y, j);
    if (d < best_d) {
      best = j;
      best_d = d;
      if (bland) break;
    }
  }
  return best;
}

int DenseSimplex::ChooseLeaving(const std::vector<double>& alpha, bool bland,
                                bool barred_artificials) const {
  int leave = -1;
  double best_ratio = kInf;
  double best_alpha = 0.0;
  for (int k = 0; k < m_; ++k) {
    const double a = alpha[k];
    double ratio;
    if (barred_artificials && vars_[basis_[k]].origin == Origin::kArtificial) {
      // Artificials are fixed at zero once phase 1 is done.
      if (std::abs(a) <= opts_.pivot_tol) continue;
      ratio = 0.0;
    } else {
      if (a <= opts_.pivot_tol) continue;
      ratio = std::max(x_basic_[k], 0.0) / a;
    }
    const double mag = std::abs(a);
    bool take = false;
    if (leave < 0 || ratio < best_ratio - 1e-12) {
      take = true;
    } else if (ratio <= best_ratio + 1e-12) {
      take = bland ? basis_[k] < basis_[leave] : mag > best_alpha;
    }
    if (take) {
      leave = k;
      best_ratio = std::min(ratio, best_ratio);
      best_alpha = mag;
    }
  }
  return leave;
}

void DenseSimplex::Pivot(int row, int entering, const std::vector<double>& alpha,
                         double step) {
  const double pivot = alpha[row];
  for (int k = 0; k < m_; ++k) {
    if (k != row) x_basic_[k] -= step * alpha[k];
  }
  x_basic_[row] = step;

  double* prow = &binv_[static_cast<size_t>(row) * m_];
  const double inv = 1.0 / pivot;
  for (int c = 0; c < m_; ++c) prow[c] *= inv;
  for (int k = 0; k < m_; ++k) {
    if (k == row || alpha[k] == 0.0) continue;
    const double factor = alpha[k];
    double* krow = &binv_[static_cast<size_t>(k) * m_];
    for (int c = 0; c < m_; ++c) krow[c] -= factor * prow[c];
  }
  basis_pos_[basis_[row]] = -1;
  basis_[row] = entering;
  basis_pos_[entering] = row;
  ++since_refactor_;
}

LpStatus DenseSimplex::RunPhase(const std::vector<double>& cost, bool barred_artificials) {
  std::vector<double> y;
  std::vector<double> alpha(m_);
  bool bland = false;
  int degenerate_run = 0;
  bool verified = false;
  while (true) {
    if (iterations_ >= iteration_limit_) return LpStatus::kIterationLimit;
    if (since_refactor_ >= opts_.refactor_interval && !Refactor()) {
      return LpStatus::kNumericalError;
    }
    ComputeDuals(cost, y);
    const int entering = ChooseEntering(cost, y, bland, barred_artificials);
    if (entering < 0) {
      // Confirm optimality on a fresh factorization before accepting it.
      if (since_refactor_ == 0 || verified) return LpStatus::kOptimal;
      if (!Refactor()) return LpStatus::kNumericalError;
      verified = true;
      continue;
    }
    verified = false;
    std::fill(alpha.begin(), alpha.end(), 0.0);
    for (const auto& [row, coef] : vars_[entering].entries) {
      for (int k = 0; k < m_; ++k) {
        alpha[k] += binv_[static_cast<size_t>(k) * m_ + row] * coef;
      }
    }
    const int leave = ChooseLeaving(alpha, bland, barred_artificials);
    if (leave < 0) return LpStatus::kUnbounded;
    const bool fixed_leaving =
        barred_artificials && vars_[basis_[leave]].origin == Origin::kArtificial;
    const double step =
        fixed_leaving ? 0.0 : std::max(x_basic_[leave], 0.0) / alpha[leave];
    Pivot(leave, entering, alpha, step);
    ++iterations_;
    if (step <= 1e-12) {
      if (++degenerate_run > opts_.degenerate_limit) bland = true;
    } else {
      degenerate_run = 0;
      bland = false;
    }
  }
}

LpResult DenseSimplex::Solve() {
  LpResult result;
  BuildColumns();
  CrashBasis();
  iteration_limit_ = opts_.max_iterations > 0
                         ? opts_.max_iterations
                         : 100 * (m_ + static_cast<int>(vars_.size())) + 10000;
  if (!Refactor()) {
    result.status = LpStatus::kNumericalError;
    return result;
  }
  const int total = static_cast<int>(vars_.size());
  if (has_artificials_) {
    std::vector<double> phase1(total, 0.0);
    for (int j = 0; j < total; ++j) {
      if (vars_[j].origin == Origin::kArtificial) phase1[j] = 1.0;
    }
    const LpStatus s = RunPhase(phase1, false);
    if (s != LpStatus::kOptimal) {
      result.status = s == LpStatus::kUnbounded ? LpStatus::kNumericalError : s;
      result.iterations = iterations_;
      return result;
    }
    double infeasibility = 0.0;
    for (int k = 0; k < m_; ++k) {
      if (vars_[basis_[k]].origin == Origin::kArtificial) {
        infeasibility += std::abs(x_basic_[k]);
      }
    }
    double scale = 1.0;
    for (double b : rhs_) scale = std::max(scale, std::abs(b));
    if (infeasibility > 1e-7 * scale) {
      result.status = LpStatus::kInfeasible;
      result.iterations = iterations_;
      return result;
    }
  }
  std::vector<double> phase2(total, 0.0);
  for (int j = 0; j < total; ++j) {
    if (vars_[j].origin != Origin::kArtificial) phase2[j] = vars_[j].cost;
  }
  const LpStatus s = RunPhase(phase2, true);
  result.iterations = iterations_;
  result.status = s;
  if (s != LpStatus::kOptimal) return result;

  result.x.assign(n_, 0.0);
  for (int k = 0; k < m_; ++k) {
    const int j = basis_[k];
    if (j < n_) {
      const double v = x_basic_[k];
      result.x[j] = (v < 0.0 && v > -opts_.feasibility_tol * 100) ? 0.0 : v;
    }
  }
  ComputeDuals(phase2, result.row_duals);
  result.objective = 0.0;
  for (int j = 0; j < n_; ++j) result.objective += vars_[j].cost * result.x[j];
  return result;
}

}  // namespace

LpResult SolveLp(const LpProblem& problem, const SimplexOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  LpResult result;
  if (problem.num_rows() == 0) {
    // Nothing constrains x; zero is optimal unless some cost is negative.
    result.x.assign(problem.num_variables(), 0.0);
    result.status = LpStatus::kOptimal;
    for (const auto& v : problem.variables()) {
      if (v.cost < 0.0) result.status = LpStatus::kUnbounded;
    }
  } else {
    DenseSimplex simplex(problem, options);
    result = simplex.Solve();
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace famcg
