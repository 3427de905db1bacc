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

#include "famcg/solvers.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "famcg/line_search.h"

namespace famcg {

const char* MethodName(Method method) {
  switch (method) {
    case Method::kPlain: return "plain";
    case Method::kSmoothing: return "smooth";
    case Method::kBoxStep: return "boxstep";
    case Method::kFamily: return "family";
  }
  return "unknown";
}

std::optional<Method> ParseMethod(std::string_view name) {
  if (name == "plain") return Method::kPlain;
  if (name == "smooth") return Method::kSmoothing;
  if (name == "boxstep") return Method::kBoxStep;
  if (name == "family") return Method::kFamily;
  return std::nullopt;
}

const char* TerminationName(Termination t) {
  switch (t) {
    case Termination::kOptimal: return "optimal";
    case Termination::kIterationLimit: return "iteration_limit";
    case Termination::kTimeLimit: return "time_limit";
    case Termination::kInfeasibleStart: return "infeasible_start";
    case Termination::kLpFailure: return "lp_failure";
  }
  return "unknown";
}

void SolverOptions::Validate() const {
  if (!(nu > 0.0)) throw std::invalid_argument("nu must be > 0");
  if (!(eta_epsilon > 0.0)) throw std::invalid_argument("eta_epsilon must be > 0");
  if (inner_cap < 1) throw std::invalid_argument("inner_cap must be >= 1");
  if (!(m_cap >= 1.0)) throw std::invalid_argument("m_cap must be >= 1");
  if (!(rc_tolerance < 0.0)) throw std::invalid_argument("rc_tolerance must be < 0");
  if (!(lambda_init >= 0.0 && lambda_init <= 1.0)) {
    throw std::invalid_argument("lambda_init must lie in [0, 1]");
  }
  if (!(lambda_step >= 0.0 && lambda_step <= 1.0)) {
    throw std::invalid_argument("lambda_step must lie in [0, 1]");
  }
  if (lambda_init > 0.0 && lambda_step == 0.0) {
    throw std::invalid_argument("lambda_step must be > 0 when lambda_init > 0");
  }
  if (max_outer_iterations < 1) throw std::invalid_argument("max_outer_iterations must be >= 1");
  if (!(time_limit_seconds > 0.0)) throw std::invalid_argument("time limit must be > 0");
}

bool RunResult::GapClosed() const {
  return std::abs(objective - bound) <= 1e-5 * (1.0 + std::abs(objective));
}

namespace {

using Clock = std::chrono::steady_clock;

double Ms(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

// Shared bookkeeping for one run: pool, clocks, trace and best bound.
class RunState {
 public:
  RunState(const Instance& inst, const SolverOptions& opts)
      : inst_(inst), opts_(opts), pool_(inst), start_(Clock::now()) {
    opts.Validate();
    result_.method = opts.method;
    // Every cost is nonnegative, so the zero dual is always a valid start.
    const DualSolution zero = DualSolution::Zero(inst);
    const PricingResult pr = PriceAll(inst, pool_, zero, opts.rc_tolerance);
    result_.bound = LagrangianBound(inst, zero, pr.facility_min);
  }

  ColumnPool& pool() { return pool_; }
  RunResult& result() { return result_; }

  // Limit check before starting another outer iteration.
  bool OutOfBudget() {
    if (result_.iterations() >= opts_.max_outer_iterations) {
      result_.termination = Termination::kIterationLimit;
      return true;
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
    if (elapsed >= opts_.time_limit_seconds) {
      result_.termination = Termination::kTimeLimit;
      return true;
    }
    return false;
  }

  void AddLpTime(const LpSolution& lp) { result_.lp_time += lp.lp_time; }

  // Returns the bound at pi and folds it into the running best.
  double RecordBound(const DualSolution& pi, const PricingResult& pr) {
    const double bound = LagrangianBound(inst_, pi, pr.facility_min);
    result_.bound = std::max(result_.bound, bound);
    result_.duplicate_columns += pr.duplicates;
    result_.priced_columns += pr.duplicates + static_cast<int>(pr.new_columns.size());
    return bound;
  }

  int AddColumns(const std::vector<Column>& cols) {
    int added = 0;
    for (const Column& col : cols) added += pool_.Insert(col).was_new ? 1 : 0;
    return added;
  }

  void Record(double rmp_obj, int added, int inner_iters, int misprices) {
    IterationRecord rec;
    rec.iter = result_.iterations() + 1;
    rec.rmp_obj = rmp_obj;
    rec.best_bound = result_.bound;
    rec.n_columns = pool_.size();
    rec.cols_added = added;
    rec.inner_iters = inner_iters;
    rec.misprices = misprices;
    rec.lp_ms_cum = Ms(result_.lp_time);
    rec.total_ms_cum = Ms(Clock::now() - start_);
    result_.trace.push_back(rec);
  }

  void SetPrimal(std::span<const Column> cols, const LpSolution& lp) {
    result_.objective = lp.objective;
    result_.theta.clear();
    for (size_t l = 0; l < cols.size(); ++l) {
      if (lp.theta[l] > 1e-9) result_.theta.emplace_back(cols[l], lp.theta[l]);
    }
    result_.final_duals = lp.duals;
  }

  // Upper limit on any feasible master objective; a larger bound proves
  // the master problem infeasible.
  double InfeasibilityThreshold() const {
    return inst_.num_facilities() * DefaultArtificialCost(inst_);
  }

  RunResult Finish() {
    result_.num_columns = pool_.size();
    result_.total_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start_);
    return std::move(result_);
  }

 private:
  const Instance& inst_;
  const SolverOptions& opts_;
  ColumnPool pool_;
  Clock::time_point start_;
  RunResult result_;
};

// Terminal state of the artificial-based methods.
void FinishWithArtificials(RunState& state, const LpSolution& lp) {
  state.result().termination = lp.TotalArtificialUsage() < 1e-7 ? Termination::kOptimal
                                                                 : Termination::kInfeasibleStart;
}

DualSolution Combine(double lambda, const DualSolution& center, const DualSolution& pi) {
  DualSolution out = pi;
  for (size_t u = 0; u < out.cover.size(); ++u) {
    out.cover[u] = lambda * center.cover[u] + (1.0 - lambda) * pi.cover[u];
  }
  for (size_t f = 0; f < out.pack.size(); ++f) {
    out.pack[f] = lambda * center.pack[f] + (1.0 - lambda) * pi.pack[f];
  }
  return out;
}

DualSolution Axpy(const DualSolution& base, double scale, const DualSolution& dir) {
  DualSolution out = base;
  for (size_t u = 0; u < out.cover.size(); ++u) {
    out.cover[u] = std::max(0.0, base.cover[u] + scale * dir.cover[u]);
  }
  for (size_t f = 0; f < out.pack.size(); ++f) {
    out.pack[f] = std::max(0.0, base.pack[f] + scale * dir.pack[f]);
  }
  return out;
}

DualSolution Difference(const DualSolution& a, const DualSolution& b) {
  DualSolution out = a;
  for (size_t u = 0; u < out.cover.size(); ++u) out.cover[u] -= b.cover[u];
  for (size_t f = 0; f < out.pack.size(); ++f) out.pack[f] -= b.pack[f];
  return out;
}

}  // namespace

RunResult RunUnstabilized(const Instance& inst, const SolverOptions& opts) {
  RunState state(inst, opts);
  const double art_cost = opts.artificial_cost.value_or(DefaultArtificialCost(inst));
  while (!state.OutOfBudget()) {
    const LpSolution lp = SolveRmp(state.pool(), art_cost);
    state.AddLpTime(lp);
    if (!lp.optimal()) {
      state.result().termination = Termination::kLpFailure;
      break;
    }
    state.SetPrimal(state.pool().columns(), lp);
    const PricingResult pr = PriceAll(inst, state.pool(), lp.duals, opts.rc_tolerance);
    state.RecordBound(lp.duals, pr);
    const int added = state.AddColumns(pr.new_columns);
    state.Record(lp.objective, added, 0, 0);
    if (added == 0) {
      FinishWithArtificials(state, lp);
      break;
    }
  }
  return state.Finish();
}

RunResult RunSmoothing(const Instance& inst, const SolverOptions& opts) {
  RunState state(inst, opts);
  const double art_cost = opts.artificial_cost.value_or(DefaultArtificialCost(inst));
  DualSolution center = DualSolution::Zero(inst);
  double center_bound = state.result().bound;
  while (!state.OutOfBudget()) {
    const LpSolution lp = SolveRmp(state.pool(), art_cost);
    state.AddLpTime(lp);
    if (!lp.optimal()) {
      state.result().termination = Termination::kLpFailure;
      break;
    }
    state.SetPrimal(state.pool().columns(), lp);
    int misprices = 0;
    int added = 0;
    bool exact_and_clean = false;
    while (true) {
      double lambda = opts.lambda_init - misprices * opts.lambda_step;
      if (lambda < 1e-12) lambda = 0.0;
      const DualSolution priced_at =
          lambda == 0.0 ? lp.duals : Combine(lambda, center, lp.duals);
      const PricingResult pr = PriceAll(inst, state.pool(), priced_at, opts.rc_tolerance);
      const double bound = state.RecordBound(priced_at, pr);
      if (bound > center_bound) {
        center_bound = bound;
        center = priced_at;
      }
      added = state.AddColumns(pr.new_columns);
      if (added > 0) break;
      if (lambda == 0.0) {
        exact_and_clean = true;
        break;
      }
      ++misprices;
    }
    state.Record(lp.objective, added, 0, misprices);
    if (exact_and_clean) {
      FinishWithArtificials(state, lp);
      break;
    }
  }
  return state.Finish();
}

RunResult RunBoxStep(const Instance& inst, const SolverOptions& opts) {
  RunState state(inst, opts);
  DualSolution incumbent = DualSolution::Zero(inst);
  double incumbent_bound = state.result().bound;
  while (!state.OutOfBudget()) {
    const Box box = Box::Around(incumbent.cover, opts.nu);
    const LpSolution lp = SolveBoxedRmp(inst, state.pool().columns(), box);
    state.AddLpTime(lp);
    if (!lp.optimal()) {
      state.result().termination = Termination::kLpFailure;
      break;
    }
    state.SetPrimal(state.pool().columns(), lp);
    const PricingResult pr = PriceAll(inst, state.pool(), lp.duals, opts.rc_tolerance);
    const double bound = state.RecordBound(lp.duals, pr);
    const int added = state.AddColumns(pr.new_columns);
    // With clean pricing the boxed dual maximizes the bound over the box, so
    // it is kept even if rounding puts it a hair below the incumbent.
    if (bound >= incumbent_bound || added == 0) {
      incumbent = lp.duals;
      incumbent_bound = std::max(incumbent_bound, bound);
    }
    state.Record(lp.objective, added, 1, 0);
    if (added == 0 && lp.MaxBoxSlack() <= 1e-9) {
      state.result().termination = Termination::kOptimal;
      break;
    }
    if (state.result().bound > state.InfeasibilityThreshold()) {
      state.result().termination = Termination::kInfeasibleStart;
      break;
    }
  }
  return state.Finish();
}

double MaxStep(const DualSolution& pi0, const DualSolution& direction, double m_cap) {
  double m = m_cap;
  auto limit = [&m](double base, double dir) {
    if (dir < 0.0) m = std::min(m, base / -dir);
  };
  for (size_t u = 0; u < pi0.cover.size(); ++u) limit(pi0.cover[u], direction.cover[u]);
  for (size_t f = 0; f < pi0.pack.size(); ++f) limit(pi0.pack[f], direction.pack[f]);
  return m;
}

namespace {

// The step limit as printed, -dir_z / pi0_z, for audit logs only.
double PrintedStepLimit(const DualSolution& pi0, const DualSolution& direction,
                        double m_cap) {
  double m = std::numeric_limits<double>::infinity();
  auto limit = [&m](double base, double dir) {
    if (dir < 0.0 && base > 0.0) m = std::min(m, -dir / base);
  };
  for (size_t u = 0; u < pi0.cover.size(); ++u) limit(pi0.cover[u], direction.cover[u]);
  for (size_t f = 0; f < pi0.pack.size(); ++f) limit(pi0.pack[f], direction.pack[f]);
  return std::isinf(m) ? m_cap : m;
}

}  // namespace

FrmpResult SolveFrmp(const Instance& inst, const ColumnPool& pool, const DualSolution& pi0,
                     const SolverOptions& opts) {
  FrmpResult out;
  DualSolution incumbent = pi0;
  double incumbent_value = FamilyLagrangianValue(inst, pool, incumbent);
  out.accepted_values.push_back(incumbent_value);
  for (int it = 0; it < opts.inner_cap; ++it) {
    ProjectedPool projected = ProjectPool(inst, pool.columns(), incumbent, opts.nu);
    const Box box = Box::Around(incumbent.cover, opts.nu);
    out.lp = SolveBoxedRmp(inst, projected.columns, box);
    out.columns = std::move(projected.columns);
    ++out.iterations;
    if (!out.lp.optimal()) break;
    out.pi_bar = out.lp.duals;
    const double bar_value = FamilyLagrangianValue(inst, pool, out.pi_bar);
    if (bar_value <= incumbent_value + 1e-9 * (1.0 + std::abs(incumbent_value))) {
      out.ended_by = FrmpEnd::kOptimalBreak;
      out.ascent_point = incumbent;
      return out;
    }
    const DualSolution direction = Difference(out.pi_bar, incumbent);
    const double m = MaxStep(incumbent, direction, opts.m_cap);
    auto phi = [&](double eta) {
      return FamilyLagrangianValue(inst, pool, Axpy(incumbent, eta * m, direction));
    };
    double eta = 1.0;
    if (m > 1.0) {
      eta = LineSearchEta(phi, 1.0 / m, 1.0, opts.eta_epsilon);
      // The search works on a tolerance; never end up behind the boxed dual.
      if (phi(eta) < phi(1.0 / m)) eta = 1.0 / m;
    }
    if (opts.debug_log) {
      *opts.debug_log << "frmp step " << it << ": m=" << m
                      << " printed_ratio=" << PrintedStepLimit(incumbent, direction, opts.m_cap)
                      << " eta=" << eta << "\n";
    }
    const double step = std::max(eta * m, 1.0);
    incumbent = Axpy(incumbent, step, direction);
    incumbent_value = FamilyLagrangianValue(inst, pool, incumbent);
    out.accepted_values.push_back(incumbent_value);
    out.step_lengths.push_back(step);
  }
  out.ended_by = FrmpEnd::kInnerCap;
  out.ascent_point = incumbent;
  return out;
}

RunResult RunFamilyCg(const Instance& inst, const SolverOptions& opts) {
  RunState state(inst, opts);
  DualSolution incumbent = DualSolution::Zero(inst);
  double incumbent_bound = state.result().bound;
  DualSolution start = incumbent;
  while (!state.OutOfBudget()) {
    FrmpResult frmp = SolveFrmp(inst, state.pool(), start, opts);
    state.AddLpTime(frmp.lp);
    if (!frmp.lp.optimal()) {
      state.result().termination = Termination::kLpFailure;
      break;
    }
    state.SetPrimal(frmp.columns, frmp.lp);
    const PricingResult pr = PriceAll(inst, state.pool(), frmp.pi_bar, opts.rc_tolerance);
    const double bound = state.RecordBound(frmp.pi_bar, pr);
    if (bound >= incumbent_bound) {
      incumbent = frmp.pi_bar;
      incumbent_bound = bound;
    }
    const int added = state.AddColumns(pr.new_columns);
    state.Record(frmp.lp.objective, added, frmp.iterations, 0);
    if (added == 0) {
      if (frmp.ended_by == FrmpEnd::kInnerCap) {
        // The ascent was cut short and nothing priced out: resume it.
        start = frmp.ascent_point;
      } else if (frmp.lp.MaxBoxSlack() <= 1e-9) {
        state.result().termination = Termination::kOptimal;
        break;
      } else {
        // Clean dual on the box boundary: recenter on it.
        start = frmp.pi_bar;
      }
    } else {
      start = incumbent;
    }
    if (state.result().bound > state.InfeasibilityThreshold()) {
      state.result().termination = Termination::kInfeasibleStart;
      break;
    }
  }
  return state.Finish();
}

RunResult RunMethod(const Instance& inst, const SolverOptions& opts) {
  switch (opts.method) {
    case Method::kPlain: return RunUnstabilized(inst, opts);
    case Method::kSmoothing: return RunSmoothing(inst, opts);
    case Method::kBoxStep: return RunBoxStep(inst, opts);
    case Method::kFamily: return RunFamilyCg(inst, opts);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace famcg
