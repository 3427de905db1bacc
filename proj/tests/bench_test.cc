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

#include "famcg/bench.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gtest/gtest.h"

namespace famcg {
namespace {

BenchConfig SmallConfig() {
  BenchConfig c;
  c.seeds = {1, 2, 3};
  c.params.num_facilities = 4;
  c.params.num_customers = 16;
  c.params.capacity = 20;
  return c;
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(StatsTest, MeanAndMedian) {
  EXPECT_EQ(Mean({}), 0.0);
  EXPECT_EQ(Mean({1.0, 2.0, 6.0}), 3.0);
  EXPECT_EQ(Median({5.0, 1.0, 3.0}), 3.0);
  EXPECT_EQ(Median({4.0, 1.0, 3.0, 2.0}), 2.5);
}

TEST(ParseSeedsTest, RangesAndLists) {
  EXPECT_EQ(ParseSeeds("1..4"), (std::vector<uint64_t>{1, 2, 3, 4}));
  EXPECT_EQ(ParseSeeds("7"), std::vector<uint64_t>{7});
  EXPECT_EQ(ParseSeeds("3,1,9"), (std::vector<uint64_t>{3, 1, 9}));
  EXPECT_THROW(ParseSeeds("5..2"), std::invalid_argument);
  EXPECT_THROW(ParseSeeds("a"), std::invalid_argument);
  EXPECT_THROW(ParseSeeds("1,,2"), std::invalid_argument);
}

TEST(TraceCsvTest, RoundTrip) {
  std::vector<IterationRecord> trace = {{1, 10.5, -3.0, 4, 4, 1, 0, 0.125, 0.5},
                                        {2, 9.25, 1.0 / 3.0, 8, 4, 2, 1, 0.25, 1.0}};
  std::stringstream s;
  WriteTrace(s, trace);
  const std::string text = s.str();
  EXPECT_EQ(text.rfind("# famcg-trace v1\n", 0), 0u);
  EXPECT_NE(text.find("iter,rmp_obj,best_bound,n_columns,cols_added,inner_iters,misprices,"
                      "lp_ms_cum,total_ms_cum\n"),
            std::string::npos);
  const std::vector<IterationRecord> back = ReadTrace(s);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].best_bound, 1.0 / 3.0);
  EXPECT_EQ(back[1].misprices, 1);
  std::stringstream bad("iter\n1\n");
  EXPECT_THROW(ReadTrace(bad), std::runtime_error);
}

TEST(SummarizeTest, SingletonEqualsRunScalars) {
  RunRow r{"family", 4, 3, 9, 17, 12.5, 3.25, 8.0, 8.0, "optimal"};
  const auto s = Summarize({r});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].mean_iterations, 17.0);
  EXPECT_EQ(s[0].median_iterations, 17.0);
  EXPECT_EQ(s[0].mean_total_ms, 12.5);
  EXPECT_EQ(s[0].median_lp_ms, 3.25);
}

TEST(SummarizeTest, SkipsNonOptimalCells) {
  RunRow a{"plain", 1, 3, 9, 10, 1.0, 0.5, 8.0, 8.0, "optimal"};
  RunRow b{"plain", 2, 3, 9, 99, 9.0, 9.0, 0.0, 0.0, "iteration_limit"};
  const auto s = Summarize({a, b});
  EXPECT_EQ(s[0].cells, 1);
  EXPECT_EQ(s[0].mean_iterations, 10.0);
}

TEST(RunBenchTest, SummaryIsRecomputableFromRunsCsv) {
  BenchConfig c = SmallConfig();
  c.out_dir = std::filesystem::temp_directory_path() / "famcg_bench_test";
  std::filesystem::remove_all(c.out_dir);
  const BenchReport report = RunBench(c);
  ASSERT_EQ(report.rows.size(), 12u);
  EXPECT_TRUE(report.warnings.empty());
  for (const RunRow& r : report.rows) {
    EXPECT_EQ(r.termination, "optimal");
    EXPECT_LE(r.lp_ms, r.total_ms);
    EXPECT_TRUE(std::filesystem::exists(
        c.out_dir / ("trace_" + r.method + "_" + std::to_string(r.seed) + ".csv")));
  }
  std::ifstream runs(c.out_dir / "runs.csv");
  const std::vector<RunRow> back = ReadRuns(runs);
  ASSERT_EQ(back.size(), report.rows.size());
  std::stringstream recomputed;
  WriteSummary(recomputed, Summarize(back));
  EXPECT_EQ(recomputed.str(), Slurp(c.out_dir / "summary.csv"));

  const std::string summary = Slurp(c.out_dir / "summary.csv");
  for (const char* label : {"mean_iterations", "median_iterations", "mean_total_ms",
                            "median_total_ms", "mean_lp_ms", "median_lp_ms"}) {
    EXPECT_NE(summary.find(label), std::string::npos) << label;
  }
  EXPECT_NE(summary.find("statistic,plain,smooth,boxstep,family"), std::string::npos);
  std::filesystem::remove_all(c.out_dir);
}

// Everything but the timing columns.
bool SameTraceModuloTiming(const std::vector<IterationRecord>& a,
                           const std::vector<IterationRecord>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].iter != b[i].iter || a[i].rmp_obj != b[i].rmp_obj ||
        a[i].best_bound != b[i].best_bound || a[i].n_columns != b[i].n_columns ||
        a[i].cols_added != b[i].cols_added || a[i].inner_iters != b[i].inner_iters ||
        a[i].misprices != b[i].misprices) {
      return false;
    }
  }
  return true;
}

TEST(RunBenchTest, DeterministicAcrossInvocationsAndJobs) {
  const auto dir = std::filesystem::temp_directory_path();
  BenchConfig c = SmallConfig();
  c.out_dir = dir / "famcg_bench_a";
  RunBench(c);
  c.out_dir = dir / "famcg_bench_b";
  RunBench(c);
  c.out_dir = dir / "famcg_bench_c";
  c.jobs = 3;
  RunBench(c);
  for (const char* m : {"plain", "smooth", "boxstep", "family"}) {
    for (int seed = 1; seed <= 3; ++seed) {
      const std::string name = std::string("trace_") + m + "_" + std::to_string(seed) + ".csv";
      std::ifstream a(dir / "famcg_bench_a" / name), b(dir / "famcg_bench_b" / name),
          cc(dir / "famcg_bench_c" / name);
      const auto ta = ReadTrace(a), tb = ReadTrace(b), tc = ReadTrace(cc);
      EXPECT_TRUE(SameTraceModuloTiming(ta, tb)) << name;
      EXPECT_TRUE(SameTraceModuloTiming(ta, tc)) << name;
    }
  }
  for (const char* d : {"famcg_bench_a", "famcg_bench_b", "famcg_bench_c"}) {
    std::filesystem::remove_all(dir / d);
  }
}

TEST(RunBenchTest, RejectsEmptyConfig) {
  BenchConfig c = SmallConfig();
  c.seeds.clear();
  EXPECT_THROW(RunBench(c), std::invalid_argument);
  c = SmallConfig();
  c.jobs = 0;
  EXPECT_THROW(RunBench(c), std::invalid_argument);
}

TEST(RunBenchTest, LimitedCellsBecomeWarnings) {
  BenchConfig c = SmallConfig();
  c.seeds = {1};
  c.methods = {Method::kPlain};
  c.options.max_outer_iterations = 1;
  const BenchReport r = RunBench(c);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].termination, "iteration_limit");
  EXPECT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.summary[0].cells, 0);
}

}  // namespace
}  // namespace famcg
