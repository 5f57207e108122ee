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

#include "binlab/heuristics.hpp"

#include <random>

#include "binlab/error.hpp"
#include "doctest.h"
#include "helpers.hpp"

namespace binlab {
namespace {

using testing::Draw;

TEST_CASE("fit rules on small cases") {
  CHECK(NextFit(Instance::Regular(10, {6, 6, 4})).bins_opened == 2);
  CHECK(FirstFit(Instance::Regular(10, {5, 7, 5})).bins_opened == 2);
  // 0.6 joins 0.3 (fullest fit), so 0.7 finds no room: 3 bins against OPT 2.
  CHECK(BestFit(Instance::Regular(10, {3, 6, 4, 7})).bins_opened == 3);
  CHECK(DecreasingVariant(Instance::Regular(10, {5, 5, 5, 5}), FitRule::kNext).bins_opened == 2);
}

TEST_CASE("next fit never looks back") {
  // 0.5 0.6 0.5: NF opens three bins, FF puts the last half in bin 0.
  const Instance inst = Instance::Regular(10, {5, 6, 5});
  CHECK(NextFit(inst).assignment == std::vector<std::int64_t>{0, 1, 2});
  CHECK(FirstFit(inst).assignment == std::vector<std::int64_t>{0, 1, 0});
}

TEST_CASE("best fit picks the fullest bin, lowest index on ties") {
  CHECK(FitSequence(std::vector<std::int64_t>{5, 7, 3}, 10, FitRule::kBest) ==
        std::vector<std::int64_t>{0, 1, 1});
  CHECK(FitSequence(std::vector<std::int64_t>{6, 6, 4}, 10, FitRule::kBest) ==
        std::vector<std::int64_t>{0, 1, 0});
}

TEST_CASE("zero sizes are skipped") {
  const Packing p = FirstFit(Instance::Regular(10, {0, 4, 0}));
  CHECK(p.assignment == std::vector<std::int64_t>{kNoBin, 0, kNoBin});
  CHECK(p.bins_opened == 1);
}

TEST_CASE("decreasing order is stable") {
  CHECK(DecreasingOrder(std::vector<std::int64_t>{3, 7, 3, 9}) ==
        std::vector<std::size_t>{3, 1, 0, 2});
}

TEST_CASE("ffd on the four-class example") {
  // 52+29 leaves 19, so the 27s and 21s go to fresh bins: 600 + 200 + 300.
  const Instance inst(100, testing::Runs({{52, 600}, {29, 600}, {27, 600}, {21, 1200}}), 1000);
  const Packing p = DecreasingVariant(inst, FitRule::kFirst);
  CHECK(p.bins_opened == 1100);
  CHECK(ValidatePacking(inst, p).ok());
}

TEST_CASE("heuristics reject irregular inventories") {
  const Instance irregular(10, {3}, 1, {5});
  CHECK_THROWS_AS(FirstFit(irregular), Error);
}

TEST_CASE("random: validity and first fit no worse than next fit") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const std::int64_t grid = Draw(rng, 2, 100);
    const Instance inst =
        Instance::Regular(grid, testing::RandomSizes(rng, Draw(rng, 1, 40), 0, grid));
    const Packing nf = NextFit(inst), ff = FirstFit(inst), bf = BestFit(inst);
    CHECK(ValidatePacking(inst, nf).ok());
    CHECK(ValidatePacking(inst, ff).ok());
    CHECK(ValidatePacking(inst, bf).ok());
    for (FitRule rule : {FitRule::kNext, FitRule::kFirst, FitRule::kBest}) {
      CHECK(ValidatePacking(inst, DecreasingVariant(inst, rule)).ok());
    }
    CHECK(ff.bins_opened <= nf.bins_opened);
  }
}

}  // namespace
}  // namespace binlab
