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

#ifndef BINLAB_BENCH_HPP_
#define BINLAB_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binlab/instance.hpp"
#include "binlab/rational.hpp"
#include "json.hpp"

namespace binlab {

struct GeneratorParams {
  std::int64_t grid = 100;
  std::int64_t n = 10;
  std::int64_t min_num = 1;     // size range [min_num, max_num] / grid
  std::int64_t max_num = 100;
  std::int64_t bins = 0;        // 0: one bin per item
  bool allow_empty = false;
  // Clustered mode: `cluster_base` repeated `copies` times, then shuffled.
  std::vector<std::int64_t> cluster_base;
  std::int64_t copies = 1;
};

// Deterministic for a fixed seed. Throws Error(kInvalidArgument) on an empty
// size range, or n == 0 without allow_empty.
Instance Generate(const GeneratorParams& params, std::uint64_t seed);

enum class Algorithm { kNf, kFf, kBf, kNfd, kFfd, kBfd, kPartition, kDp, kExact };

// nf|ff|bf|nfd|ffd|bfd|partition|dp|exact; Error(kInvalidArgument) otherwise.
Algorithm ParseAlgorithm(std::string_view name);
const char* AlgorithmName(Algorithm alg);

struct SolveOptions {
  Rational eps{1, 10};
  std::int64_t c = 2;
  std::int64_t node_budget = 2000000;
  std::size_t state_budget = 5000000;
  std::size_t config_cap = 200000;
  bool oracle = false;   // also compute exact OPT for the ratio columns
  bool timing = false;   // add wall_ms; makes reports run-dependent
  bool trace = false;    // include the DP trace
};

inline constexpr int kReportSchemaVersion = 1;

struct SolveOutcome {
  Algorithm algorithm = Algorithm::kFfd;
  Packing packing;
  ValidityReport validity;
  nlohmann::json details;  // algorithm-specific section, may be null
  double wall_ms = 0.0;
};

SolveOutcome RunSolver(Algorithm alg, const Instance& inst, const SolveOptions& options);

// Versioned JSON report for one solver run.
nlohmann::json SolveReport(const Instance& inst, const SolveOutcome& outcome,
                           const SolveOptions& options);

// Flat table: header line plus one line per report row.
std::string ReportCsv(const std::vector<nlohmann::json>& rows, bool timing);

struct BenchParams {
  GeneratorParams generator;
  std::uint64_t seed = 1;
  std::int64_t count = 10;
  std::vector<Algorithm> algorithms;
};

// One row per (instance, algorithm), instances generated from seed,
// seed + 1, ...
nlohmann::json Bench(const BenchParams& params, const SolveOptions& options);

}  // namespace binlab

#endif  // BINLAB_BENCH_HPP_
