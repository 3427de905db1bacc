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

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <thread>

namespace famcg {

namespace {

// Shortest text that reads back to the same double.
std::string Num(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double ParseDouble(std::string_view text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::runtime_error("bad number: " + std::string(text));
  }
  return value;
}

template <typename Int>
Int ParseInt(std::string_view text) {
  Int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::runtime_error("bad integer: " + std::string(text));
  }
  return value;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

// Data lines after the version comment and the column header.
std::vector<std::string> DataLines(std::istream& in, std::string_view version,
                                   std::string_view columns) {
  std::string line;
  if (!std::getline(in, line) || line != version) {
    throw std::runtime_error("missing header " + std::string(version));
  }
  if (!std::getline(in, line) || line != columns) {
    throw std::runtime_error("unexpected columns: " + line);
  }
  std::vector<std::string> out;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

constexpr std::string_view kTraceColumns =
    "iter,rmp_obj,best_bound,n_columns,cols_added,inner_iters,misprices,lp_ms_cum,"
    "total_ms_cum";
constexpr std::string_view kRunsColumns =
    "method,seed,nf,nc,iterations,total_ms,lp_ms,final_obj,final_bound,termination";

void OpenOrThrow(std::ofstream& file, const std::filesystem::path& path) {
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

void WriteTrace(std::ostream& out, const std::vector<IterationRecord>& trace) {
  out << kTraceHeader << '\n' << kTraceColumns << '\n';
  for (const IterationRecord& r : trace) {
    out << r.iter << ',' << Num(r.rmp_obj) << ',' << Num(r.best_bound) << ',' << r.n_columns
        << ',' << r.cols_added << ',' << r.inner_iters << ',' << r.misprices << ','
        << Num(r.lp_ms_cum) << ',' << Num(r.total_ms_cum) << '\n';
  }
}

void WriteTraceFile(const std::filesystem::path& path,
                    const std::vector<IterationRecord>& trace) {
  std::ofstream file;
  OpenOrThrow(file, path);
  WriteTrace(file, trace);
}

std::vector<IterationRecord> ReadTrace(std::istream& in) {
  std::vector<IterationRecord> out;
  for (const std::string& line : DataLines(in, kTraceHeader, kTraceColumns)) {
    const auto f = SplitFields(line);
    if (f.size() != 9) throw std::runtime_error("bad trace row: " + line);
    IterationRecord r;
    r.iter = ParseInt<int>(f[0]);
    r.rmp_obj = ParseDouble(f[1]);
    r.best_bound = ParseDouble(f[2]);
    r.n_columns = ParseInt<int>(f[3]);
    r.cols_added = ParseInt<int>(f[4]);
    r.inner_iters = ParseInt<int>(f[5]);
    r.misprices = ParseInt<int>(f[6]);
    r.lp_ms_cum = ParseDouble(f[7]);
    r.total_ms_cum = ParseDouble(f[8]);
    out.push_back(r);
  }
  return out;
}

RunRow MakeRunRow(const RunResult& run, uint64_t seed, const Instance& inst) {
  RunRow row;
  row.method = MethodName(run.method);
  row.seed = seed;
  row.nf = inst.num_facilities();
  row.nc = inst.num_customers();
  row.iterations = run.iterations();
  row.total_ms = std::chrono::duration<double, std::milli>(run.total_time).count();
  row.lp_ms = std::chrono::duration<double, std::milli>(run.lp_time).count();
  row.final_obj = run.objective;
  row.final_bound = run.bound;
  row.termination = TerminationName(run.termination);
  return row;
}

void WriteRuns(std::ostream& out, const std::vector<RunRow>& rows) {
  out << kRunsHeader << '\n' << kRunsColumns << '\n';
  for (const RunRow& r : rows) {
    out << r.method << ',' << r.seed << ',' << r.nf << ',' << r.nc << ',' << r.iterations << ','
        << Num(r.total_ms) << ',' << Num(r.lp_ms) << ',' << Num(r.final_obj) << ','
        << Num(r.final_bound) << ',' << r.termination << '\n';
  }
}

std::vector<RunRow> ReadRuns(std::istream& in) {
  std::vector<RunRow> out;
  for (const std::string& line : DataLines(in, kRunsHeader, kRunsColumns)) {
    const auto f = SplitFields(line);
    if (f.size() != 10) throw std::runtime_error("bad runs row: " + line);
    RunRow r;
    r.method = std::string(f[0]);
    r.seed = ParseInt<uint64_t>(f[1]);
    r.nf = ParseInt<int>(f[2]);
    r.nc = ParseInt<int>(f[3]);
    r.iterations = ParseInt<int>(f[4]);
    r.total_ms = ParseDouble(f[5]);
    r.lp_ms = ParseDouble(f[6]);
    r.final_obj = ParseDouble(f[7]);
    r.final_bound = ParseDouble(f[8]);
    r.termination = std::string(f[9]);
    out.push_back(std::move(r));
  }
  return out;
}

double Mean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) / values.size();
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<MethodSummary> Summarize(const std::vector<RunRow>& rows) {
  std::vector<std::string> order;
  for (const RunRow& r : rows) {
    if (std::find(order.begin(), order.end(), r.method) == order.end()) {
      order.push_back(r.method);
    }
  }
  std::vector<MethodSummary> out;
  for (const std::string& method : order) {
    std::vector<double> iters, total, lp;
    for (const RunRow& r : rows) {
      if (r.method != method || r.termination != "optimal") continue;
      iters.push_back(r.iterations);
      total.push_back(r.total_ms);
      lp.push_back(r.lp_ms);
    }
    MethodSummary s;
    s.method = method;
    s.cells = static_cast<int>(iters.size());
    s.mean_iterations = Mean(iters);
    s.median_iterations = Median(iters);
    s.mean_total_ms = Mean(total);
    s.median_total_ms = Median(total);
    s.mean_lp_ms = Mean(lp);
    s.median_lp_ms = Median(lp);
    out.push_back(s);
  }
  return out;
}

void WriteSummary(std::ostream& out, const std::vector<MethodSummary>& summary) {
  out << kSummaryHeader << '\n' << "statistic";
  for (const MethodSummary& s : summary) out << ',' << s.method;
  out << '\n';
  auto row = [&](const char* name, auto field) {
    out << name;
    for (const MethodSummary& s : summary) out << ',' << Num(s.*field);
    out << '\n';
  };
  out << "cells";
  for (const MethodSummary& s : summary) out << ',' << s.cells;
  out << '\n';
  row("mean_iterations", &MethodSummary::mean_iterations);
  row("median_iterations", &MethodSummary::median_iterations);
  row("mean_total_ms", &MethodSummary::mean_total_ms);
  row("median_total_ms", &MethodSummary::median_total_ms);
  row("mean_lp_ms", &MethodSummary::mean_lp_ms);
  row("median_lp_ms", &MethodSummary::median_lp_ms);
}

std::vector<uint64_t> ParseSeeds(std::string_view text) {
  std::vector<uint64_t> out;
  auto parse = [](std::string_view s) {
    try {
      return ParseInt<uint64_t>(s);
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("bad seed: " + std::string(s));
    }
  };
  const size_t dots = text.find("..");
  if (dots != std::string_view::npos) {
    const uint64_t lo = parse(text.substr(0, dots));
    const uint64_t hi = parse(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty seed range");
    for (uint64_t s = lo; s <= hi; ++s) out.push_back(s);
    return out;
  }
  for (std::string_view piece : SplitFields(text)) out.push_back(parse(piece));
  return out;
}

BenchReport RunBench(const BenchConfig& config) {
  if (config.seeds.empty() || config.methods.empty()) {
    throw std::invalid_argument("bench needs at least one seed and one method");
  }
  if (config.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  config.options.Validate();

  struct Cell {
    uint64_t seed = 0;
    Method method = Method::kPlain;
    RunRow row;
    std::vector<IterationRecord> trace;
    std::string error;
  };
  std::vector<Cell> cells;
  for (uint64_t seed : config.seeds) {
    for (Method method : config.methods) cells.push_back({seed, method, {}, {}, {}});
  }

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < cells.size(); i = next++) {
      Cell& cell = cells[i];
      try {
        const Instance inst = GenerateInstance(cell.seed, config.params);
        SolverOptions opts = config.options;
        opts.method = cell.method;
        opts.debug_log = nullptr;
        RunResult run = RunMethod(inst, opts);
        cell.row = MakeRunRow(run, cell.seed, inst);
        cell.trace = std::move(run.trace);
      } catch (const std::exception& e) {
        cell.row.method = MethodName(cell.method);
        cell.row.seed = cell.seed;
        cell.row.nf = config.params.num_facilities;
        cell.row.nc = config.params.num_customers;
        cell.row.termination = "error";
        cell.error = e.what();
      }
    }
  };
  const int threads = std::min<int>(config.jobs, static_cast<int>(cells.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  BenchReport report;
  for (const Cell& cell : cells) {
    report.rows.push_back(cell.row);
    if (!cell.error.empty()) {
      report.warnings.push_back(cell.row.method + " seed " + std::to_string(cell.seed) +
                                " failed: " + cell.error);
    } else if (cell.row.termination != "optimal") {
      report.warnings.push_back(cell.row.method + " seed " + std::to_string(cell.seed) +
                                " ended with " + cell.row.termination +
                                "; left out of the summary");
    }
  }
  report.summary = Summarize(report.rows);

  if (!config.out_dir.empty()) {
    std::filesystem::create_directories(config.out_dir);
    for (const Cell& cell : cells) {
      if (!cell.error.empty()) continue;
      WriteTraceFile(config.out_dir / ("trace_" + cell.row.method + "_" +
                                       std::to_string(cell.seed) + ".csv"),
                     cell.trace);
    }
    std::ofstream runs;
    OpenOrThrow(runs, config.out_dir / "runs.csv");
    WriteRuns(runs, report.rows);
    std::ofstream summary;
    OpenOrThrow(summary, config.out_dir / "summary.csv");
    WriteSummary(summary, report.summary);
  }
  return report;
}

}  // namespace famcg
