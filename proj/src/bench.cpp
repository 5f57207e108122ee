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

#include "binlab/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "binlab/config_cover.hpp"
#include "binlab/error.hpp"
#include "binlab/exact.hpp"
#include "binlab/heuristics.hpp"
#include "binlab/irregular_dp.hpp"
#include "binlab/partition.hpp"

namespace binlab {

using nlohmann::json;

Instance Generate(const GeneratorParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> sizes;
  if (!params.cluster_base.empty()) {
    if (params.copies < 1) throw Error(ErrorKind::kInvalidArgument, "copies must be >= 1");
    for (std::int64_t r = 0; r < params.copies; ++r) {
      sizes.insert(sizes.end(), params.cluster_base.begin(), params.cluster_base.end());
    }
    std::shuffle(sizes.begin(), sizes.end(), rng);
  } else {
    if (params.min_num > params.max_num || params.min_num < 0 ||
        params.max_num > params.grid) {
      throw Error(ErrorKind::kInvalidArgument,
                  "empty size range [" + std::to_string(params.min_num) + ", " +
                      std::to_string(params.max_num) + "]/" + std::to_string(params.grid));
    }
    if (params.n < 0) throw Error(ErrorKind::kInvalidArgument, "n must be >= 0");
    if (params.n == 0 && !params.allow_empty) {
      throw Error(ErrorKind::kInvalidArgument, "n = 0 needs allow_empty");
    }
    std::uniform_int_distribution<std::int64_t> pick(params.min_num, params.max_num);
    for (std::int64_t i = 0; i < params.n; ++i) sizes.push_back(pick(rng));
  }
  const std::int64_t bins =
      params.bins > 0 ? params.bins
                      : std::max<std::int64_t>(1, static_cast<std::int64_t>(sizes.size()));
  return Instance(params.grid, std::move(sizes), bins, {}, params.allow_empty);
}

namespace {

constexpr std::pair<Algorithm, const char*> kNames[] = {
    {Algorithm::kNf, "nf"},   {Algorithm::kFf, "ff"},
    {Algorithm::kBf, "bf"},   {Algorithm::kNfd, "nfd"},
    {Algorithm::kFfd, "ffd"}, {Algorithm::kBfd, "bfd"},
    {Algorithm::kPartition, "partition"}, {Algorithm::kDp, "dp"},
    {Algorithm::kExact, "exact"},
};

json RationalList(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(ToString(v));
  return out;
}

json PlanJson(const PartitionResult& result) {
  json out = {{"fallback", result.fallback},
              {"residual_fallback", result.residual_fallback},
              {"cover_size", result.cover.size()}};
  if (!result.plan) {
    out["c_star"] = nullptr;
    return out;
  }
  const PartitionPlan& plan = *result.plan;
  json table = json::array();
  for (const auto& cell : plan.table) {
    json row = {{"c", cell.c}, {"delta", ToString(cell.delta)}};
    row["cover_size"] = cell.cover_size ? json(*cell.cover_size) : json(nullptr);
    row["optimal"] = cell.optimal;
    table.push_back(row);
  }
  out["c_star"] = plan.c_star;
  out["delta_star"] = ToString(plan.delta_star);
  out["ratio"] = ToString(plan.ratio);
  out["ratio_value"] = ToDouble(plan.ratio);
  out["copies"] = plan.copies;
  out["segment"] = RationalList(plan.segment.target);
  out["segment_cover"] = json::parse(SerializeCover(plan.segment_cover));
  out["residual"] = RationalList(plan.residual.target);
  out["residual_cover"] = json::parse(SerializeCover(plan.residual_cover));
  out["table"] = table;
  return out;
}

std::string CsvCell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

Algorithm ParseAlgorithm(std::string_view name) {
  for (const auto& [alg, text] : kNames) {
    if (name == text) return alg;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown algorithm \"" + std::string(name) +
                  "\" (expected nf|ff|bf|nfd|ffd|bfd|partition|dp|exact)");
}

const char* AlgorithmName(Algorithm alg) {
  for (const auto& [a, text] : kNames) {
    if (a == alg) return text;
  }
  return "?";
}

SolveOutcome RunSolver(Algorithm alg, const Instance& inst, const SolveOptions& options) {
  SolveOutcome out;
  out.algorithm = alg;
  const auto start = std::chrono::steady_clock::now();
  switch (alg) {
    case Algorithm::kNf: out.packing = NextFit(inst); break;
    case Algorithm::kFf: out.packing = FirstFit(inst); break;
    case Algorithm::kBf: out.packing = BestFit(inst); break;
    case Algorithm::kNfd: out.packing = DecreasingVariant(inst, FitRule::kNext); break;
    case Algorithm::kFfd: out.packing = DecreasingVariant(inst, FitRule::kFirst); break;
    case Algorithm::kBfd: out.packing = DecreasingVariant(inst, FitRule::kBest); break;
    case Algorithm::kPartition: {
      PartitionOptions popt;
      popt.config_cap = options.config_cap;
      popt.node_budget = options.node_budget;
      PartitionResult result = AlgorithmB(inst, options.eps, popt);
      out.packing = std::move(result.packing);
      out.details = PlanJson(result);
      break;
    }
    case Algorithm::kDp: {
      const DpResult result =
          SolveRounded(inst, options.eps, options.c, options.state_budget);
      out.packing = result.packing;
      const auto bound = StateCountBound(static_cast<std::uint64_t>(inst.bin_count()),
                                         options.eps / options.c, inst.size());
      out.details = json::parse(SerializeDpResult(result));
      out.details["delta"] = ToString(options.eps / options.c);
      out.details["state_bound"] = bound ? json(*bound) : json("exceeds budget");
      if (!options.trace) out.details.erase("trace");
      break;
    }
    case Algorithm::kExact: {
      ExactResult result = ExactOpt(inst, options.node_budget);
      out.packing = std::move(result.packing);
      out.details = {{"lower", result.lower},
                     {"upper", result.upper},
                     {"optimal", result.optimal},
                     {"nodes", result.nodes}};
      break;
    }
  }
  out.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  out.validity = ValidatePacking(inst, out.packing);
  return out;
}

json SolveReport(const Instance& inst, const SolveOutcome& outcome,
                 const SolveOptions& options) {
  const SizeProfile prof = Profile(inst);
  const std::int64_t volume = LowerBoundVolume(inst);
  json report = {
      {"schema_version", kReportSchemaVersion},
      {"algorithm", AlgorithmName(outcome.algorithm)},
      {"instance",
       {{"n", inst.size()},
        {"k", prof.k()},
        {"grid", inst.grid()},
        {"bins", inst.bin_count()},
        {"regular", inst.is_regular()}}},
      {"bins_opened", outcome.packing.bins_opened},
      {"valid", outcome.validity.ok()},
      {"volume_lower_bound", volume},
  };
  if (!outcome.validity.ok()) report["violation"] = outcome.validity.message;
  report["ratio_vs_volume"] =
      volume > 0 ? json(static_cast<double>(outcome.packing.bins_opened) / volume)
                 : json(nullptr);
  report["oracle"] = nullptr;
  report["ratio_vs_opt"] = nullptr;
  if (options.oracle && inst.is_regular()) {
    const ExactResult opt = ExactOpt(inst, options.node_budget);
    report["oracle"] = {{"lower", opt.lower}, {"upper", opt.upper}, {"optimal", opt.optimal}};
    if (opt.optimal && opt.upper > 0) {
      report["ratio_vs_opt"] =
          static_cast<double>(outcome.packing.bins_opened) / opt.upper;
    }
  }
  if (!outcome.details.is_null()) {
    const char* key = outcome.algorithm == Algorithm::kPartition ? "plan"
                      : outcome.algorithm == Algorithm::kDp      ? "dp"
                                                                 : "exact";
    report[key] = outcome.details;
  }
  if (options.timing) report["wall_ms"] = outcome.wall_ms;
  return report;
}

std::string ReportCsv(const std::vector<json>& rows, bool timing) {
  std::ostringstream out;
  out << "seed,algorithm,n,k,bins_opened,volume_lower_bound,opt,ratio_vs_volume,"
         "ratio_vs_opt,valid";
  if (timing) out << ",wall_ms";
  out << '\n';
  for (const json& row : rows) {
    json opt = nullptr;
    if (row.contains("oracle") && row["oracle"].is_object() &&
        row["oracle"]["optimal"].get<bool>()) {
      opt = row["oracle"]["upper"];
    }
    out << CsvCell(row.value("seed", json(nullptr))) << ',' << CsvCell(row["algorithm"])
        << ',' << CsvCell(row["instance"]["n"]) << ',' << CsvCell(row["instance"]["k"])
        << ',' << CsvCell(row["bins_opened"]) << ',' << CsvCell(row["volume_lower_bound"])
        << ',' << CsvCell(opt) << ',' << CsvCell(row["ratio_vs_volume"]) << ','
        << CsvCell(row["ratio_vs_opt"]) << ',' << CsvCell(row["valid"]);
    if (timing) out << ',' << CsvCell(row.value("wall_ms", json(nullptr)));
    out << '\n';
  }
  return out.str();
}

json Bench(const BenchParams& params, const SolveOptions& options) {
  json rows = json::array();
  for (std::int64_t r = 0; r < params.count; ++r) {
    const std::uint64_t seed = params.seed + static_cast<std::uint64_t>(r);
    const Instance inst = Generate(params.generator, seed);
    for (Algorithm alg : params.algorithms) {
      json row = SolveReport(inst, RunSolver(alg, inst, options), options);
      row["seed"] = seed;
      rows.push_back(std::move(row));
    }
  }
  return {{"schema_version", kReportSchemaVersion}, {"rows", rows}};
}

}  // namespace binlab
