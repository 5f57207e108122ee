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

#include "binlab/config_cover.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "binlab/error.hpp"
#include "binlab/verify/oracles.hpp"
#include "doctest.h"
#include "helpers.hpp"

namespace binlab {
namespace {

using testing::Draw;
using testing::Runs;

std::set<std::vector<std::int64_t>> CountSet(const ConfigSet& set) {
  std::set<std::vector<std::int64_t>> out;
  for (const BinConfig& c : set.configs) out.insert(c.counts);
  return out;
}

SizeProfile ThreeClass() {
  return Profile(Instance(100, Runs({{60, 1000}, {65, 1000}, {75, 1000}}), 3000));
}

SegmentVector Target(std::initializer_list<Rational> t) { return SegmentVector{t}; }

TEST_CASE("configurations of the three-class profile") {
  const SizeProfile prof = ThreeClass();
  CHECK(CountSet(EnumerateConfigs(prof, Rational(3, 10), 1000)) ==
        std::set<std::vector<std::int64_t>>{{0, 0, 1}});
  CHECK(CountSet(EnumerateConfigs(prof, Rational(2, 5), 1000)) ==
        std::set<std::vector<std::int64_t>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("configurations respect item counts") {
  const SizeProfile prof = Profile(Instance::Regular(10, {5, 5, 5, 5}));
  CHECK(CountSet(EnumerateConfigs(prof, Rational(1, 2), 100)) ==
        std::set<std::vector<std::int64_t>>{{1}, {2}});
  const SizeProfile one = Profile(Instance::Regular(10, {5}));
  CHECK(CountSet(EnumerateConfigs(one, Rational(1, 2), 100)) ==
        std::set<std::vector<std::int64_t>>{{1}});
}

TEST_CASE("configuration enumeration errors") {
  const SizeProfile prof = ThreeClass();
  CHECK_THROWS_AS(EnumerateConfigs(prof, Rational(0), 10), Error);
  CHECK_THROWS_AS(EnumerateConfigs(prof, Rational(3, 5), 10), Error);
  try {
    EnumerateConfigs(Profile(Instance::Regular(100, Runs({{1, 100}}))), Rational(1, 2), 5);
    FAIL("expected explosion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kConfigExplosion);
  }
  CHECK_THROWS_AS(EnumerateConfigs(Profile(Instance::Regular(10, {0, 5})), Rational(1, 2), 10),
                  Error);
}

TEST_CASE("enumeration matches brute force over count vectors") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const std::int64_t grid = 20;
    std::vector<std::int64_t> sizes;
    const std::int64_t k = Draw(rng, 1, 3);
    for (std::int64_t i = 0; i < k; ++i) {
      const std::int64_t s = Draw(rng, 2, 20);
      for (std::int64_t c = Draw(rng, 1, 5); c > 0; --c) sizes.push_back(s);
    }
    const SizeProfile prof = Profile(Instance::Regular(grid, sizes));
    const Rational delta(Draw(rng, 1, 10), 20);
    std::set<std::vector<std::int64_t>> expect;
    std::vector<std::int64_t> x(prof.k(), 0);
    auto walk = [&](auto&& self, std::size_t i) -> void {
      if (i == prof.k()) {
        std::int64_t len = 0;
        for (std::size_t j = 0; j < x.size(); ++j) len += x[j] * prof.sizes[j];
        if (len <= grid && Rational(len, grid) >= 1 - delta) expect.insert(x);
        return;
      }
      for (x[i] = 0; x[i] <= prof.counts[i]; ++x[i]) self(self, i + 1);
    };
    walk(walk, 0);
    CHECK(CountSet(EnumerateConfigs(prof, delta, 100000)) == expect);
  }
}

TEST_CASE("demand counts round up") {
  const std::vector<std::int64_t> sizes{21, 52};
  CHECK(DemandCounts(Target({Rational(42, 100), Rational(53, 100)}), sizes, 100) ==
        std::vector<std::int64_t>{2, 2});
  CHECK(DemandCounts(Target({Rational(0), Rational(52, 100)}), sizes, 100) ==
        std::vector<std::int64_t>{0, 1});
}

TEST_CASE("min cover of the four-class segment") {
  const SizeProfile prof =
      Profile(Instance(100, Runs({{52, 600}, {29, 600}, {27, 600}, {21, 1200}}), 1000));
  REQUIRE(prof.sizes == std::vector<std::int64_t>{21, 27, 29, 52});
  const ConfigSet set = EnumerateConfigs(prof, Rational(1, 10), 200000);
  const SegmentVector seg =
      Target({Rational(21, 5), Rational(27, 10), Rational(29, 10), Rational(26, 5)});
  const CoverResult r = MinCover(seg, set, 1000000);
  CHECK(r.optimal);
  CHECK(r.cover.size() == 15);
  CHECK(CoverFeasible(r.cover, seg, prof.sizes, prof.grid));

  const CoverResult zero = MinCover(Target({0, 0, 0, 0}), set, 1000);
  CHECK(zero.cover.empty());
  CHECK(zero.cover.size() == 0);

  const Cover twice = CoverUnion(r.cover, r.cover);
  CHECK(twice.size() == 30);
  CHECK(CoverRepeat(r.cover, 60).size() == 900);
  CHECK(CoverRepeat(r.cover, 0).empty());
}

TEST_CASE("uncoverable targets") {
  const SizeProfile prof = ThreeClass();
  const ConfigSet set = EnumerateConfigs(prof, Rational(3, 10), 1000);
  try {
    MinCover(Target({Rational(6, 10), 0, 0}), set, 1000);
    FAIL("expected uncoverable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kUncoverable);
  }
  CHECK(MinCover(Target({0, 0, Rational(3, 2)}), set, 1000).cover.size() == 2);
}

TEST_CASE("cover container") {
  Cover c(2);
  c.Add({1, 0}, 2);
  c.Add({0, 1});
  c.Add({1, 0});
  CHECK(c.size() == 4);
  CHECK(c.entries().size() == 2);
  CHECK(c.Slots() == std::vector<std::int64_t>{3, 1});
  CHECK(ParseCover(SerializeCover(c)) == c);
  CHECK_THROWS_AS(CoverUnion(c, Cover(3)), Error);
  CHECK_THROWS_AS(ParseCover("[{\"counts\":[1]}]"), Error);
}

TEST_CASE("min cover agrees with exhaustive search") {
  std::mt19937_64 rng(23);
  int compared = 0;
  for (int t = 0; t < 300; ++t) {
    const std::int64_t grid = 10;
    const std::int64_t k = Draw(rng, 1, 3);
    std::set<std::int64_t> distinct;
    while (static_cast<std::int64_t>(distinct.size()) < k) distinct.insert(Draw(rng, 1, 9));
    std::vector<std::int64_t> sizes;
    std::vector<std::int64_t> demand;
    std::int64_t left = 6;
    for (std::int64_t s : distinct) {
      const std::int64_t d = Draw(rng, 0, std::min<std::int64_t>(left, 3));
      left -= d;
      demand.push_back(d);
      for (int c = 0; c < 4; ++c) sizes.push_back(s);
    }
    const SizeProfile prof = Profile(Instance::Regular(grid, sizes));
    SegmentVector target;
    for (std::size_t i = 0; i < prof.k(); ++i) {
      target.target.push_back(Rational(demand[i] * prof.sizes[i], grid));
    }
    REQUIRE(DemandCounts(target, prof.sizes, grid) == demand);
    const ConfigSet set = EnumerateConfigs(prof, Rational(Draw(rng, 1, 5), 10), 100000);
    std::vector<std::vector<std::int64_t>> configs;
    for (const BinConfig& c : set.configs) configs.push_back(c.counts);
    std::int64_t total = 0;
    for (std::int64_t d : demand) total += d;
    const auto brute = verify::ExhaustiveMinCover(demand, configs, total);
    if (!brute) {
      CHECK_THROWS_AS(MinCover(target, set, 1000000), Error);
      continue;
    }
    const CoverResult r = MinCover(target, set, 1000000);
    CHECK(r.optimal);
    CHECK(r.cover.size() == *brute);
    CHECK(CoverFeasible(r.cover, target, prof.sizes, grid));
    CHECK(r.lower_bound <= r.cover.size());
    ++compared;
  }
  CHECK(compared > 100);
}

TEST_CASE("min cover shrinks as delta grows and respects volume") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    const std::int64_t grid = 20;
    std::vector<std::int64_t> sizes;
    for (std::int64_t k = Draw(rng, 1, 3); k > 0; --k) {
      const std::int64_t s = Draw(rng, 3, 19);
      for (std::int64_t c = Draw(rng, 1, 6); c > 0; --c) sizes.push_back(s);
    }
    const SizeProfile prof = Profile(Instance::Regular(grid, sizes));
    SegmentVector target;
    for (std::size_t i = 0; i < prof.k(); ++i) {
      target.target.push_back(Rational(prof.counts[i] * prof.sizes[i], grid));
    }
    std::optional<std::int64_t> prev;
    for (std::int64_t m = 1; m <= 10; ++m) {
      std::optional<std::int64_t> now;
      try {
        const CoverResult r = MinCover(target, EnumerateConfigs(prof, Rational(m, 20), 100000),
                                       1000000);
        REQUIRE(r.optimal);
        now = r.cover.size();
        CHECK(*now >= Ceil(target.length()));
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kUncoverable);
      }
      if (prev) {
        REQUIRE(now.has_value());
        CHECK(*now <= *prev);
      }
      prev = now;
    }
  }
}

}  // namespace
}  // namespace binlab
