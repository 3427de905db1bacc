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

// Command line front end: gen, solve, bench, verify.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "famcg/bench.h"
#include "famcg/instance.h"
#include "famcg/solvers.h"
#include "famcg/verify.h"
#include "json.hpp"

namespace {

using famcg::Method;

struct GenArgs {
  std::string seeds = "1";
  famcg::GeneratorParams params;
  std::string demands = "1..5";
};

void AddGeneratorFlags(CLI::App* cmd, GenArgs& args) {
  cmd->add_option("--seeds", args.seeds, "seed range a..b or list a,b,c");
  cmd->add_option("--nf", args.params.num_facilities, "facilities")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--nc", args.params.num_customers, "customers")->check(CLI::PositiveNumber);
  cmd->add_option("--cap", args.params.capacity, "facility capacity")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--open", args.params.open_cost, "facility opening cost")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--demands", args.demands, "demand choices a..b or list a,b,c");
}

std::vector<int> ParseDemands(const std::string& text) {
  std::vector<int> out;
  for (uint64_t d : famcg::ParseSeeds(text)) {
    if (d < 1) throw std::invalid_argument("demands must be >= 1");
    out.push_back(static_cast<int>(d));
  }
  return out;
}

struct SolveArgs {
  famcg::SolverOptions opts;
  std::string method = "family";
  double time_limit = 0.0;  // 0: none
};

void AddSolverFlags(CLI::App* cmd, SolveArgs& args) {
  cmd->add_option("--nu", args.opts.nu, "box half-width");
  cmd->add_option("--inner-cap", args.opts.inner_cap, "ascent steps per outer iteration");
  cmd->add_option("--rc-tol", args.opts.rc_tolerance, "reduced cost tolerance (< 0)");
  cmd->add_option("--m-cap", args.opts.m_cap, "step multiplier cap");
  cmd->add_option("--eta-eps", args.opts.eta_epsilon, "line search tolerance");
  cmd->add_option("--lambda-init", args.opts.lambda_init, "smoothing weight");
  cmd->add_option("--lambda-step", args.opts.lambda_step, "smoothing decrement");
  cmd->add_option("--time-limit", args.time_limit, "seconds per run (0 = none)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-iters", args.opts.max_outer_iterations, "outer iteration limit");
}

famcg::SolverOptions FinishOptions(const SolveArgs& args) {
  famcg::SolverOptions opts = args.opts;
  if (args.time_limit > 0.0) opts.time_limit_seconds = args.time_limit;
  opts.Validate();
  return opts;
}

Method MethodOrThrow(const std::string& name) {
  const auto method = famcg::ParseMethod(name);
  if (!method) throw CLI::ValidationError("--method", "unknown method '" + name + "'");
  return *method;
}

int RunGen(const GenArgs& args, const std::filesystem::path& out) {
  famcg::GeneratorParams params = args.params;
  params.demand_choices = ParseDemands(args.demands);
  std::filesystem::create_directories(out);
  for (uint64_t seed : famcg::ParseSeeds(args.seeds)) {
    const famcg::Instance inst = famcg::GenerateInstance(seed, params);
    const auto path = out / ("inst_" + std::to_string(seed) + ".json");
    famcg::WriteInstance(inst, path.string());
    std::cout << path.string() << "\n";
  }
  return 0;
}

int RunSolve(const SolveArgs& args, const std::string& instance_path,
             const std::filesystem::path& out, std::string id, bool debug) {
  famcg::SolverOptions opts = FinishOptions(args);
  opts.method = MethodOrThrow(args.method);
  if (debug) opts.debug_log = &std::cerr;
  const famcg::Instance inst = famcg::ReadInstance(instance_path);
  if (id.empty()) id = std::filesystem::path(instance_path).stem().string();
  const famcg::RunResult run = famcg::RunMethod(inst, opts);

  std::filesystem::create_directories(out);
  const std::string name = std::string(famcg::MethodName(run.method)) + "_" + id;
  famcg::WriteTraceFile(out / ("trace_" + name + ".csv"), run.trace);

  nlohmann::json result;
  result["method"] = famcg::MethodName(run.method);
  result["instance"] = instance_path;
  result["termination"] = famcg::TerminationName(run.termination);
  result["objective"] = run.objective;
  result["bound"] = run.bound;
  result["iterations"] = run.iterations();
  result["num_columns"] = run.num_columns;
  result["duplicate_columns"] = run.duplicate_columns;
  result["total_ms"] = std::chrono::duration<double, std::milli>(run.total_time).count();
  result["lp_ms"] = std::chrono::duration<double, std::milli>(run.lp_time).count();
  nlohmann::json theta = nlohmann::json::array();
  for (const auto& [col, weight] : run.theta) {
    theta.push_back({{"facility", col.facility},
                     {"customers", col.customers},
                     {"cost", col.cost},
                     {"weight", weight}});
  }
  result["theta"] = theta;
  std::ofstream(out / ("result_" + name + ".json")) << result.dump(2) << "\n";

  std::printf("%s %s: %s objective=%.10g bound=%.10g iterations=%d\n",
              famcg::MethodName(run.method), id.c_str(),
              famcg::TerminationName(run.termination), run.objective, run.bound,
              run.iterations());
  if (run.termination != famcg::Termination::kOptimal) {
    std::fprintf(stderr, "run ended without optimality: %s\n",
                 famcg::TerminationName(run.termination));
    return 2;
  }
  return 0;
}

int RunBenchCmd(GenArgs gen, const SolveArgs& args, const std::vector<std::string>& methods,
                bool paper_scale, int jobs, const std::filesystem::path& out) {
  famcg::BenchConfig config;
  if (paper_scale) {
    gen.params = famcg::GeneratorParams{};
    gen.seeds = "1..50";
  }
  config.params = gen.params;
  config.params.demand_choices = ParseDemands(gen.demands);
  config.seeds = famcg::ParseSeeds(gen.seeds);
  config.options = FinishOptions(args);
  config.methods.clear();
  for (const std::string& m : methods) config.methods.push_back(MethodOrThrow(m));
  config.jobs = jobs;
  config.out_dir = out;
  const famcg::BenchReport report = famcg::RunBench(config);
  for (const std::string& w : report.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  famcg::WriteSummary(std::cout, report.summary);
  return 0;
}

int RunVerify(const famcg::VerifyOptions& opts, const std::string& instance_path) {
  const famcg::Instance inst = famcg::ReadInstance(instance_path);
  std::vector<famcg::CheckResult> checks;
  try {
    checks = famcg::VerifyInstance(inst, opts);
  } catch (const std::length_error& e) {
    std::fprintf(stderr, "refusing to verify: %s (cap %lld columns)\n", e.what(),
                 static_cast<long long>(opts.max_columns));
    return 3;
  }
  bool all = true;
  for (const auto& c : checks) {
    std::printf("%s %s: %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    all = all && c.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Column generation for single source capacitated facility location"};
  app.require_subcommand(1);

  std::string out = ".";

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "write generated instances as JSON");
  AddGeneratorFlags(gen, gen_args);
  gen->add_option("--out", out, "output directory");

  SolveArgs solve_args;
  std::string instance_path;
  std::string id;
  bool debug = false;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance with one method");
  solve->add_option("instance", instance_path, "instance JSON")->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--method", solve_args.method, "plain, smooth, boxstep or family");
  AddSolverFlags(solve, solve_args);
  solve->add_option("--out", out, "output directory");
  solve->add_option("--id", id, "run id in file names (default: instance stem)");
  solve->add_flag("--debug", debug, "log ascent steps to stderr");

  GenArgs bench_gen;
  bench_gen.seeds = "1..10";
  bench_gen.params.num_facilities = 10;
  bench_gen.params.num_customers = 50;
  bench_gen.params.capacity = 30;
  SolveArgs bench_solve;
  std::vector<std::string> methods = {"plain", "smooth", "boxstep", "family"};
  bool paper_scale = false;
  int jobs = 1;
  CLI::App* bench = app.add_subcommand("bench", "run every (seed, method) cell");
  AddGeneratorFlags(bench, bench_gen);
  AddSolverFlags(bench, bench_solve);
  bench->add_option("--methods", methods, "methods to run")->delimiter(',');
  bench->add_flag("--paper-scale", paper_scale,
                  "50 facilities, 250 customers, capacity 150, open cost 5, seeds 1..50");
  bench->add_option("--jobs", jobs, "parallel cells")->check(CLI::PositiveNumber);
  bench->add_option("--out", out, "output directory");

  famcg::VerifyOptions verify_opts;
  std::string verify_path;
  SolveArgs verify_solve;
  CLI::App* verify = app.add_subcommand("verify", "check all methods against enumeration");
  verify->add_option("instance", verify_path, "instance JSON")->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--max-columns", verify_opts.max_columns, "enumeration cap");
  verify->add_option("--samples", verify_opts.dominance_samples, "projection samples");
  verify->add_option("--bound-samples", verify_opts.bound_samples, "bound chain samples");
  verify->add_option("--seed", verify_opts.seed, "sampling seed");
  AddSolverFlags(verify, verify_solve);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return RunGen(gen_args, out);
    if (*solve) return RunSolve(solve_args, instance_path, out, id, debug);
    if (*bench) return RunBenchCmd(bench_gen, bench_solve, methods, paper_scale, jobs, out);
    if (*verify) {
      verify_opts.solver = FinishOptions(verify_solve);
      return RunVerify(verify_opts, verify_path);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
