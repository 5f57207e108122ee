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

#include "binlab/partition.hpp"

#include <optional>
#include <random>

#include "binlab/error.hpp"
#include "binlab/exact.hpp"
#include "binlab/heuristics.hpp"
#include "doctest.h"
#include "helpers.hpp"

namespace binlab {
namespace {

using testing::Draw;
using testing::Runs;

Instance FourClass(std::int64_t scale = 100) {
  return Instance(100,
                  Runs({{52, 6 * scale}, {29, 6 * scale}, {27, 6 * scale}, {21, 12 * scale}}),
                  9 * scale);
}

Instance ThreeClass() {
  return Instance(100, Runs({{60, 1000}, {65, 1000}, {75, 1000}}), 3000);
}

TEST_CASE("distribution vector and segments") {
  const SizeProfile prof = Profile(FourClass());
  const DistributionVector d = MakeDistributionVector(prof);
  CHECK(d.mass == std::vector<std::int64_t>{25200, 16200, 17400, 31200});
  CHECK(d.length() == Rational(900));
  const SegmentVector seg = SegmentOf(d, Rational(15));
  CHECK(seg.target == std::vector<Rational>{Rational(21, 5), Rational(27, 10),
                                            Rational(29, 10), Rational(26, 5)});
  CHECK(seg.length() == Rational(15));
  CHECK_THROWS_AS(SegmentOf(d, Rational(0)), Error);
  CHECK_THROWS_AS(SegmentOf(d, Rational(901)), Error);
  CHECK(SegmentOf(d, Rational(900)).target[0] == Rational(252));
}

TEST_CASE("truncation keeps whole items") {
  const SizeProfile prof = Profile(FourClass());
  const TruncatedSegment exact = TruncateSegment(
      SegmentOf(MakeDistributionVector(prof), Rational(15)), prof);
  CHECK(exact.counts == std::vector<std::int64_t>{20, 10, 10, 10});

  const SizeProfile three = Profile(ThreeClass());
  const TruncatedSegment t =
      TruncateSegment(SegmentOf(MakeDistributionVector(three), Rational(2)), three);
  // (0.6, 0.65, 0.75) per segment of length 2: one item of each.
  CHECK(t.counts == std::vector<std::int64_t>{1, 1, 1});
  const TruncatedSegment thin =
      TruncateSegment(SegmentOf(MakeDistributionVector(three), Rational(1)), three);
  CHECK(thin.counts == std::vector<std::int64_t>{0, 0, 0});
  CHECK(thin.mass == std::vector<Rational>{0, 0, 0});
}

TEST_CASE("sweep on the four-class instance") {
  const Instance inst = FourClass();
  const SizeProfile prof = Profile(inst);
  const PartitionPlan plan = SweepParameters(MakeDistributionVector(prof), prof, Rational(1, 10));
  CHECK(plan.c_star == 3);
  CHECK(plan.ratio == Rational(1));
  CHECK(plan.copies == 300);
  CHECK(plan.segment_cover.size() == 3);
  CHECK(plan.table.size() == 20 * 4);  // c in [1, 20], delta in {2/10 .. 5/10}
  for (const SweepCell& cell : plan.table) {
    REQUIRE(cell.cover_size.has_value());
    CHECK(Rational(*cell.cover_size, cell.c) >= Rational(1));
  }
}

TEST_CASE("sweep on the three-class instance") {
  const SizeProfile prof = Profile(ThreeClass());
  const PartitionPlan plan = SweepParameters(MakeDistributionVector(prof), prof, Rational(1, 10));
  CHECK(plan.c_star == 2);
  CHECK(plan.ratio == Rational(3, 2));
  CHECK(plan.delta_star == Rational(2, 5));
  std::optional<std::int64_t> best20;
  for (const SweepCell& cell : plan.table) {
    if (cell.c == 20 && cell.cover_size && (!best20 || *cell.cover_size < *best20)) {
      best20 = cell.cover_size;
    }
  }
  REQUIRE(best20.has_value());
  CHECK(*best20 == 30);
}

TEST_CASE("no feasible plan") {
  const Instance tiny = Instance::Regular(100, {1});
  const SizeProfile prof = Profile(tiny);
  try {
    SweepParameters(MakeDistributionVector(prof), prof, Rational(1, 10));
    FAIL("expected NoFeasiblePlan");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNoFeasiblePlan);
  }
  const PartitionResult r = AlgorithmB(tiny, Rational(1, 10));
  CHECK(r.fallback);
  CHECK_FALSE(r.plan.has_value());
  CHECK(r.packing.bins_opened == 1);
  CHECK(ValidatePacking(tiny, r.packing).ok());
}

TEST_CASE("cover to packing") {
  const Instance inst = Instance::Regular(10, {5, 5, 3, 3});
  const SizeProfile prof = Profile(inst);  // sizes {3, 5}
  Cover c(2);
  c.Add({1, 1}, 2);
  const Packing p = CoverToPacking(c, inst);
  CHECK(ValidatePacking(inst, p).ok());
  CHECK(p.bins_opened == 2);

  Cover loose(2);
  loose.Add({0, 1}, 2);
  loose.Add({3, 0}, 1);
  loose.Add({1, 0}, 3);  // never used
  const Packing q = CoverToPacking(loose, inst);
  CHECK(ValidatePacking(inst, q).ok());
  CHECK(q.bins_opened == 4);  // entries fill in sorted order: (0,1) (1,0) (3,0)

  Cover short_cover(2);
  short_cover.Add({1, 1}, 1);
  try {
    CoverToPacking(short_cover, inst);
    FAIL("expected InfeasibleCover");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInfeasibleCover);
  }
  const Cover back = CoverFromPacking(inst, p);
  CHECK(back.size() == 2);
  CHECK(back.Slots() == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("algorithm B end to end") {
  const Instance four = FourClass();
  const PartitionResult a = AlgorithmB(four, Rational(1, 10));
  CHECK(a.packing.bins_opened == 900);
  CHECK(ValidatePacking(four, a.packing).ok());
  CHECK_FALSE(a.fallback);

  const Instance three = ThreeClass();
  const PartitionResult b = AlgorithmB(three, Rational(1, 10));
  CHECK(b.packing.bins_opened == 3000);
  CHECK(ValidatePacking(three, b.packing).ok());

  const PartitionResult none = AlgorithmB(Instance::Regular(10, {}, true), Rational(1, 10));
  CHECK(none.cover.empty());
  CHECK(none.packing.bins_opened == 0);
}

TEST_CASE("algorithm B argument checks") {
  const Instance inst = Instance::Regular(10, {5});
  CHECK_THROWS_AS(AlgorithmB(inst, Rational(1, 2)), Error);
  CHECK_THROWS_AS(AlgorithmB(inst, Rational(0)), Error);
  CHECK_THROWS_AS(AlgorithmB(inst, Rational(1, 30)), Error);  // off the grid
  CHECK_THROWS_AS(AlgorithmB(Instance(10, {5}, 1, {5}), Rational(1, 10)), Error);
}

TEST_CASE("cover size stays within copies times segment cover plus 2c*") {
  std::mt19937_64 rng(31);
  int planned = 0;
  for (int t = 0; t < 150; ++t) {
    const std::int64_t grid = 20;
    std::vector<std::int64_t> sizes;
    for (std::int64_t k = Draw(rng, 1, 3); k > 0; --k) {
      const std::int64_t s = Draw(rng, 2, 20);
      for (std::int64_t c = Draw(rng, 1, 12); c > 0; --c) sizes.push_back(s);
    }
    const Instance inst = Instance::Regular(grid, sizes);
    const PartitionResult r = AlgorithmB(inst, Rational(1, 10));
    CHECK(ValidatePacking(inst, r.packing).ok());
    CHECK(r.packing.bins_opened * grid >= inst.total());
    if (!r.plan) continue;
    ++planned;
    const PartitionPlan& plan = *r.plan;
    if (!r.residual_fallback) {
      CHECK(r.cover.size() <= plan.copies * plan.segment_cover.size() + 2 * plan.c_star);
    }
    CHECK(r.packing.bins_opened <= r.cover.size() + (r.residual_fallback ? 2 * plan.c_star : 0));
  }
  CHECK(planned > 50);
}

TEST_CASE("replicated four-class instance approaches the optimum") {
  for (std::int64_t l : {1, 5, 20}) {
    const Instance inst = FourClass(l);
    const PartitionResult r = AlgorithmB(inst, Rational(1, 10));
    REQUIRE(r.plan.has_value());
    const std::int64_t opt = 9 * l;  // volume bound, met by (52,27,21) and (29,29,21,21)
    CHECK(LowerBoundVolume(inst) == opt);
    const Rational ratio(r.packing.bins_opened, opt);
    CHECK(ratio >= Rational(1));
    CHECK(ratio <= Rational(1) + Rational(2 * r.plan->c_star, l * r.plan->c_star));
  }
}

}  // namespace
}  // namespace binlab
