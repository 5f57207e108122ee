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

#ifndef BINLAB_IRREGULAR_DP_HPP_
#define BINLAB_IRREGULAR_DP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binlab/instance.hpp"
#include "binlab/rational.hpp"

namespace binlab {

// Bins counted by fill level: counts[j] bins sit at level j * delta.
struct LevelState {
  std::vector<std::int32_t> counts;
  std::size_t next_item = 0;

  friend bool operator==(const LevelState&, const LevelState&) = default;
};

struct DpConfig {
  Rational delta;
  std::int32_t levels = 0;               // D = ceil(1 / delta)
  std::vector<std::int32_t> item_types;  // size / delta per item, exact
  std::size_t state_budget = 0;
};

struct DpStep {
  std::size_t item = 0;
  std::int32_t bin_type = 0;
};

struct DpResult {
  std::int64_t regular_bins_opened = 0;
  std::vector<DpStep> trace;
  Packing packing;
  std::size_t state_count = 0;
};

// Builds the item types for `inst` on step `delta`. Throws
// Error(kInvalidArgument) if some size is not an exact multiple of delta.
DpConfig MakeDpConfig(const Instance& inst, const Rational& delta,
                      std::size_t state_budget);

// All bins start at level 0 except irregular ones, which enter pre-filled
// to level ceil((1 - capacity) / delta) with their opening cost sunk.
LevelState InitialState(const Instance& inst, const DpConfig& cfg);

// Bin types j with counts[j] >= 1 and s + j * delta <= 1, ascending.
std::vector<std::int32_t> Allow(const GridSize& item, const LevelState& state,
                                const DpConfig& cfg);

// 1 for an empty bin, 0 for a non-empty one, nullopt (infinite) when j is
// not allowed for the item.
std::optional<std::int32_t> StepCost(const GridSize& item, const LevelState& state,
                                     std::int32_t j, const DpConfig& cfg);

// Memoized minimum number of regular bins opened when placing the items of
// `inst` from state.next_item on, starting at `state`. Ties choose the
// smallest bin type. Size-zero items take no bin and leave no trace step.
// The packing names the instance's bins when `state` is InitialState(inst);
// from any other state, bins are numbered level by level.
// Throws Error(kStuck) when no placement exists and
// Error(kStateBudgetExhausted) when the memo table outgrows the budget.
DpResult Assign(const LevelState& state, const DpConfig& cfg, const Instance& inst);

// Assign from the initial state on an instance already on the delta grid.
DpResult SolveOnGrid(const Instance& inst, const Rational& delta,
                     std::size_t state_budget);

// Rounds every size up to a multiple of eps / c, solves the rounded
// instance and replays the trace on the original sizes. Items smaller than
// eps are rejected with Error(kItemBelowEpsilon).
DpResult SolveRounded(const Instance& inst, const Rational& eps, std::int64_t c,
                      std::size_t state_budget);

// n * C(m + D - 1, D - 1) with D = ceil(1 / delta); nullopt on overflow.
std::optional<std::uint64_t> StateCountBound(std::uint64_t m, const Rational& delta,
                                             std::uint64_t n);

// {"opened", "trace": [{"item", "bin_type"}], "state_count"}
std::string SerializeDpResult(const DpResult& result);

}  // namespace binlab

#endif  // BINLAB_IRREGULAR_DP_HPP_
