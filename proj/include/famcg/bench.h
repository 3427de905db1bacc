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

#ifndef FAMCG_BENCH_H_
#define FAMCG_BENCH_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "famcg/instance.h"
#include "famcg/solvers.h"

namespace famcg {

inline constexpr std::string_view kTraceHeader = "# famcg-trace v1";
inline constexpr std::string_view kRunsHeader = "# famcg-runs v1";
inline constexpr std::string_view kSummaryHeader = "# famcg-summary v1";

void WriteTrace(std::ostream& out, const std::vector<IterationRecord>& trace);
void WriteTraceFile(const std::filesystem::path& path,
                    const std::vector<IterationRecord>& trace);
// Throws std::runtime_error on a malformed file.
std::vector<IterationRecord> ReadTrace(std::istream& in);

// One row of runs.csv.
struct RunRow {
  std::string method;
  uint64_t seed = 0;
  int nf = 0;
  int nc = 0;
  int iterations = 0;
  double total_ms = 0.0;
  double lp_ms = 0.0;
  double final_obj = 0.0;
  double final_bound = 0.0;
  std::string termination;  // TerminationName, or "error"
};

RunRow MakeRunRow(const RunResult& run, uint64_t seed, const Instance& inst);

void WriteRuns(std::ostream& out, const std::vector<RunRow>& rows);
std::vector<RunRow> ReadRuns(std::istream& in);

struct MethodSummary {
  std::string method;
  int cells = 0;
  double mean_iterations = 0.0;
  double median_iterations = 0.0;
  double mean_total_ms = 0.0;
  double median_total_ms = 0.0;
  double mean_lp_ms = 0.0;
  double median_lp_ms = 0.0;
};

double Mean(std::vector<double> values);
// Average of the two middle values for even sizes.
double Median(std::vector<double> values);

// Statistics over rows with termination "optimal", one entry per method in
// order of first appearance.
std::vector<MethodSummary> Summarize(const std::vector<RunRow>& rows);

// One row per statistic, one column per method.
void WriteSummary(std::ostream& out, const std::vector<MethodSummary>& summary);

// Parses "1..50", "3", or "1,4,9". Throws std::invalid_argument.
std::vector<uint64_t> ParseSeeds(std::string_view text);

struct BenchConfig {
  std::vector<uint64_t> seeds;
  GeneratorParams params;
  std::vector<Method> methods = {Method::kPlain, Method::kSmoothing, Method::kBoxStep,
                                 Method::kFamily};
  SolverOptions options;  // method is overridden per cell
  int jobs = 1;
  std::filesystem::path out_dir;  // empty: write nothing
};

struct BenchReport {
  std::vector<RunRow> rows;  // seed-major, then method order
  std::vector<MethodSummary> summary;
  std::vector<std::string> warnings;
};

// Runs every (seed, method) cell. Cells run in parallel when jobs > 1; each
// cell owns its instance and solver state. Files are written after all cells
// finish: trace_<method>_<seed>.csv, runs.csv, summary.csv.
BenchReport RunBench(const BenchConfig& config);

}  // namespace famcg

#endif  // FAMCG_BENCH_H_
