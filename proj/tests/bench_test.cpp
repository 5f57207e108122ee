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

#include "binlab/error.hpp"
#include "doctest.h"

namespace binlab {
namespace {

TEST_CASE("generator is deterministic per seed") {
  GeneratorParams p;
  p.n = 30;
  p.min_num = 10;
  p.max_num = 90;
  const Instance a = Generate(p, 9), b = Generate(p, 9), c = Generate(p, 10);
  CHECK(std::ranges::equal(a.sizes(), b.sizes()));
  CHECK_FALSE(std::ranges::equal(a.sizes(), c.sizes()));
  CHECK(a.size() == 30);
  CHECK(a.bin_count() == 30);
  CHECK(std::ranges::all_of(a.sizes(), [](std::int64_t s) { return s >= 10 && s <= 90; }));
}

TEST_CASE("generator errors and clustered mode") {
  GeneratorParams p;
  p.n = 0;
  CHECK_THROWS_AS(Generate(p, 1), Error);
  p.allow_empty = true;
  CHECK(Generate(p, 1).empty());

  GeneratorParams bad;
  bad.min_num = 50;
  bad.max_num = 40;
  CHECK_THROWS_AS(Generate(bad, 1), Error);

  GeneratorParams cl;
  cl.cluster_base = {52, 27, 21};
  cl.copies = 4;
  const Instance inst = Generate(cl, 5);
  CHECK(inst.size() == 12);
  CHECK(std::ranges::count(inst.sizes(), 27) == 4);
}

TEST_CASE("algorithm names") {
  CHECK(ParseAlgorithm("ffd") == Algorithm::kFfd);
  CHECK(ParseAlgorithm("partition") == Algorithm::kPartition);
  CHECK(std::string(AlgorithmName(Algorithm::kDp)) == "dp");
  try {
    ParseAlgorithm("harmonic");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidArgument);
  }
}

TEST_CASE("every solver yields a valid, reported packing") {
  GeneratorParams p;
  p.n = 8;
  p.min_num = 25;
  p.max_num = 80;
  const Instance inst = Generate(p, 3);
  SolveOptions opts;
  opts.oracle = true;
  opts.eps = Rational(1, 5);
  for (Algorithm alg : {Algorithm::kNf, Algorithm::kFf, Algorithm::kBf, Algorithm::kNfd,
                        Algorithm::kFfd, Algorithm::kBfd, Algorithm::kPartition, Algorithm::kDp,
                        Algorithm::kExact}) {
    CAPTURE(AlgorithmName(alg));
    const SolveOutcome out = RunSolver(alg, inst, opts);
    CHECK(out.validity.ok());
    const auto report = SolveReport(inst, out, opts);
    CHECK(report["schema_version"] == kReportSchemaVersion);
    CHECK(report["valid"] == true);
    CHECK(report["bins_opened"].get<std::int64_t>() >= report["oracle"]["upper"].get<std::int64_t>());
    CHECK(report["oracle"]["optimal"] == true);
    CHECK_FALSE(report.contains("wall_ms"));
  }
}

TEST_CASE("partition report carries the sweep table") {
  GeneratorParams p;
  p.cluster_base = {52, 27, 21};
  p.copies = 6;
  const Instance inst = Generate(p, 1);
  SolveOptions opts;
  const auto report = SolveReport(inst, RunSolver(Algorithm::kPartition, inst, opts), opts);
  const auto& plan = report["plan"];
  CHECK(plan.contains("c_star"));
  CHECK(plan.contains("delta_star"));
  CHECK(plan["table"].is_array());
  CHECK(plan["table"].size() == 20 * 4);
}

TEST_CASE("bench reports are byte-identical across runs") {
  BenchParams params;
  params.generator.n = 9;
  params.generator.min_num = 20;
  params.count = 4;
  params.algorithms = {Algorithm::kFfd, Algorithm::kPartition, Algorithm::kDp};
  SolveOptions opts;
  opts.oracle = true;
  const auto a = Bench(params, opts), b = Bench(params, opts);
  CHECK(a.dump() == b.dump());
  CHECK(a["rows"].size() == 12);
  std::vector<nlohmann::json> rows(a["rows"].begin(), a["rows"].end());
  const std::string csv = ReportCsv(rows, false);
  CHECK(csv.rfind("seed,algorithm,n,k,bins_opened,volume_lower_bound,opt,", 0) == 0);
  CHECK(std::ranges::count(csv, '\n') == 13);
  CHECK(csv == ReportCsv(rows, false));
}

}  // namespace
}  // namespace binlab
