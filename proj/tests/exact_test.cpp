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

#include "binlab/exact.hpp"

#include <algorithm>
#include <random>

#include "binlab/error.hpp"
#include "binlab/verify/oracles.hpp"
#include "doctest.h"
#include "helpers.hpp"

namespace binlab {
namespace {

using testing::Draw;

TEST_CASE("small exact optima") {
  const ExactResult a = ExactOpt(Instance::Regular(100, {52, 27, 21}), 1000);
  CHECK(a.optimal);
  CHECK(a.upper == 1);
  const ExactResult b = ExactOpt(Instance::Regular(100, {60, 65, 75}), 1000);
  CHECK(b.upper == 3);
  CHECK(b.lower == 3);
  CHECK(ValidatePacking(Instance::Regular(100, {60, 65, 75}), b.packing).ok());
  CHECK(ExactOpt(Instance::Regular(10, {}, true), 10).upper == 0);
  CHECK(ExactOpt(Instance::Regular(10, {0, 0}), 10).upper == 0);
}

TEST_CASE("volume bound") {
  CHECK(LowerBoundVolume(Instance::Regular(10, {5, 5, 1})) == 2);
  CHECK(LowerBoundVolume(Instance::Regular(10, {5, 5})) == 1);
  CHECK(LowerBoundVolume(Instance::Regular(10, {0})) == 0);
}

TEST_CASE("irregular instances are rejected") {
  CHECK_THROWS_AS(ExactOpt(Instance(10, {3}, 1, {5}), 100), Error);
}

TEST_CASE("budget exhaustion returns an interval") {
  std::mt19937_64 rng(3);
  const Instance inst = Instance::Regular(1000, testing::RandomSizes(rng, 40, 200, 600));
  const ExactResult r = ExactOpt(inst, 1);
  CHECK(r.lower <= r.upper);
  CHECK(r.lower >= LowerBoundVolume(inst));
  CHECK(ValidatePacking(inst, r.packing).ok());
}

TEST_CASE("random: matches set-partition enumeration and ignores order") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 150; ++t) {
    const std::int64_t grid = Draw(rng, 5, 60);
    auto sizes = testing::RandomSizes(rng, Draw(rng, 1, 9), 0, grid);
    const ExactResult r = ExactOpt(Instance::Regular(grid, sizes), 1000000);
    REQUIRE(r.optimal);
    CHECK(r.upper == verify::ExhaustivePartitionOpt(sizes, grid));
    std::shuffle(sizes.begin(), sizes.end(), rng);
    CHECK(ExactOpt(Instance::Regular(grid, sizes), 1000000).upper == r.upper);
  }
}

}  // namespace
}  // namespace binlab
