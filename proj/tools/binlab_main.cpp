// Copyright 2026 The binlab Authors
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

// binlab: generate instances, run solvers, verify bounds.
//
//   binlab gen --n 12 --min 25 --max 75 --seed 7 --out inst.json
//   binlab solve --instance inst.json --alg partition --eps 1/10
//   binlab bench --alg ffd,partition,dp --count 20 --csv table.csv
//   binlab verify --suite bounds

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "binlab/bench.hpp"
#include "binlab/error.hpp"
#include "binlab/verify/suites.hpp"

namespace {

using binlab::Error;
using binlab::ErrorKind;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path);
  out << text;
}

std::vector<std::int64_t> ParseIntList(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) out.push_back(std::stoll(part));
  }
  return out;
}

struct SolveFlags {
  std::string eps = "1/10";
  binlab::SolveOptions options;

  void Add(CLI::App* cmd) {
    cmd->add_option("--eps", eps, "Accuracy parameter as p/q")->capture_default_str();
    cmd->add_option("--c", options.c, "DP rounding divisor (delta = eps/c)")->capture_default_str();
    cmd->add_option("--node-budget", options.node_budget, "Branch-and-bound node limit")
        ->capture_default_str();
    cmd->add_option("--state-budget", options.state_budget, "DP memo entry limit")
        ->capture_default_str();
    cmd->add_option("--config-cap", options.config_cap, "Configuration enumeration limit")
        ->capture_default_str();
    cmd->add_flag("--oracle", options.oracle, "Compute exact OPT for the ratio columns");
    cmd->add_flag("--timing", options.timing, "Add wall-clock times to reports");
    cmd->add_flag("--trace", options.trace, "Include the DP trace");
  }

  binlab::SolveOptions Resolve() {
    options.eps = binlab::ParseRational(eps);
    return options;
  }
};

void AddGeneratorFlags(CLI::App* cmd, binlab::GeneratorParams& gen, std::string& clustered) {
  cmd->add_option("--grid", gen.grid, "Common denominator G")->capture_default_str();
  cmd->add_option("--n", gen.n, "Number of items")->capture_default_str();
  cmd->add_option("--min", gen.min_num, "Smallest size numerator")->capture_default_str();
  cmd->add_option("--max", gen.max_num, "Largest size numerator")->capture_default_str();
  cmd->add_option("--bins", gen.bins, "Bin inventory m (default: n)");
  cmd->add_flag("--allow-empty", gen.allow_empty, "Permit n = 0");
  cmd->add_option("--clustered", clustered,
                  "Comma-separated base tuple of numerators, repeated --copies times");
  cmd->add_option("--copies", gen.copies, "Copies of the clustered base tuple")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bin packing approximation-scheme laboratory"};
  app.require_subcommand(1);

  // gen
  binlab::GeneratorParams gen;
  std::string gen_clustered;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance file");
  AddGeneratorFlags(gen_cmd, gen, gen_clustered);
  gen_cmd->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output path (default stdout)");

  // solve
  std::string solve_instance, solve_alg = "ffd", solve_out, solve_csv, solve_packing;
  SolveFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on an instance file");
  solve_cmd->add_option("--instance", solve_instance, "Instance JSON")->required();
  solve_cmd->add_option("--alg", solve_alg, "nf|ff|bf|nfd|ffd|bfd|partition|dp|exact")
      ->capture_default_str();
  solve_flags.Add(solve_cmd);
  solve_cmd->add_option("--out", solve_out, "Report JSON path (default stdout)");
  solve_cmd->add_option("--csv", solve_csv, "Also write a one-row CSV table");
  solve_cmd->add_option("--packing", solve_packing, "Write the packing file");

  // bench
  binlab::GeneratorParams bench_gen;
  std::string bench_clustered, bench_algs = "ffd,partition", bench_out, bench_csv;
  std::uint64_t bench_seed = 1;
  std::int64_t bench_count = 10;
  SolveFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Run algorithms over generated instances");
  AddGeneratorFlags(bench_cmd, bench_gen, bench_clustered);
  bench_cmd->add_option("--seed", bench_seed, "First seed")->capture_default_str();
  bench_cmd->add_option("--count", bench_count, "Number of instances")->capture_default_str();
  bench_cmd->add_option("--alg", bench_algs, "Comma-separated algorithms")->capture_default_str();
  bench_flags.Add(bench_cmd);
  bench_cmd->add_option("--out", bench_out, "Report JSON path (default stdout)");
  bench_cmd->add_option("--csv", bench_csv, "Also write the CSV table");

  // verify
  std::string verify_suite = "bounds";
  auto* verify_cmd = app.add_subcommand("verify", "Run the bound and oracle suites");
  verify_cmd->add_option("--suite", verify_suite, "examples|bounds|all")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      if (!gen_clustered.empty()) gen.cluster_base = ParseIntList(gen_clustered);
      WriteOut(gen_out, binlab::SerializeInstance(binlab::Generate(gen, gen_seed)) + "\n");
      return 0;
    }
    if (*solve_cmd) {
      const binlab::Instance inst = binlab::ParseInstance(ReadFile(solve_instance));
      const binlab::SolveOptions options = solve_flags.Resolve();
      const binlab::SolveOutcome outcome =
          binlab::RunSolver(binlab::ParseAlgorithm(solve_alg), inst, options);
      const auto report = binlab::SolveReport(inst, outcome, options);
      WriteOut(solve_out, report.dump(2) + "\n");
      if (!solve_csv.empty()) WriteOut(solve_csv, binlab::ReportCsv({report}, options.timing));
      if (!solve_packing.empty()) {
        WriteOut(solve_packing, binlab::SerializePacking(outcome.packing) + "\n");
      }
      if (!outcome.validity.ok()) {
        std::cerr << "invalid packing: " << outcome.validity.message << "\n";
        return 1;
      }
      return 0;
    }
    if (*bench_cmd) {
      if (!bench_clustered.empty()) bench_gen.cluster_base = ParseIntList(bench_clustered);
      binlab::BenchParams params;
      params.generator = bench_gen;
      params.seed = bench_seed;
      params.count = bench_count;
      std::stringstream names(bench_algs);
      std::string name;
      while (std::getline(names, name, ',')) {
        if (!name.empty()) params.algorithms.push_back(binlab::ParseAlgorithm(name));
      }
      const binlab::SolveOptions options = bench_flags.Resolve();
      const auto report = binlab::Bench(params, options);
      WriteOut(bench_out, report.dump(2) + "\n");
      std::vector<nlohmann::json> rows(report["rows"].begin(), report["rows"].end());
      if (!bench_csv.empty()) WriteOut(bench_csv, binlab::ReportCsv(rows, options.timing));
      for (const auto& row : rows) {
        if (!row["valid"].get<bool>()) return 1;
      }
      return 0;
    }
    if (*verify_cmd) {
      bool ok = true;
      for (const auto& result : binlab::verify::RunSuite(verify_suite)) {
        std::cout << binlab::verify::FormatResult(result) << "\n";
        ok = ok && result.passed;
      }
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
