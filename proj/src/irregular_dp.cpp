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

#include "binlab/irregular_dp.hpp"

#include <limits>
#include <set>
#include <unordered_map>

#include "binlab/error.hpp"
#include "json.hpp"

namespace binlab {
namespace {

constexpr std::int32_t kUnreachable = std::numeric_limits<std::int32_t>::max() / 2;

// Largest level sum a unit bin can reach: floor(1 / delta).
std::int32_t TopLevel(const Rational& delta) {
  return static_cast<std::int32_t>(Floor(Rational(1) / delta));
}

void CheckDelta(const Rational& delta) {
  if (delta <= 0 || delta > 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "delta must lie in (0, 1], got " + ToString(delta));
  }
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::int32_t>& key) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int32_t v : key) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct MemoEntry {
  std::int32_t cost;
  std::int32_t bin_type;
};

class LevelDp {
 public:
  LevelDp(const DpConfig& cfg, std::vector<std::size_t> items)
      : cfg_(cfg), items_(std::move(items)), top_(TopLevel(cfg.delta)) {}

  std::int32_t Solve(std::vector<std::int32_t>& counts, std::size_t pos) {
    if (pos == items_.size()) return 0;
    std::vector<std::int32_t> key = counts;
    key.push_back(static_cast<std::int32_t>(pos));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.cost;

    const std::int32_t type = cfg_.item_types[items_[pos]];
    MemoEntry best{kUnreachable, -1};
    for (std::int32_t j = 0; j + type <= top_; ++j) {
      if (counts[static_cast<std::size_t>(j)] == 0) continue;
      --counts[static_cast<std::size_t>(j)];
      ++counts[static_cast<std::size_t>(j + type)];
      const std::int32_t sub = Solve(counts, pos + 1);
      ++counts[static_cast<std::size_t>(j)];
      --counts[static_cast<std::size_t>(j + type)];
      const std::int32_t cost = sub + (j == 0 ? 1 : 0);
      if (cost < best.cost) best = {cost, j};
    }
    memo_.emplace(std::move(key), best);
    if (memo_.size() > cfg_.state_budget) {
      throw Error(ErrorKind::kStateBudgetExhausted,
                  "memo table exceeded " + std::to_string(cfg_.state_budget) +
                      " states");
    }
    return best.cost;
  }

  std::int32_t BestType(const std::vector<std::int32_t>& counts, std::size_t pos) const {
    std::vector<std::int32_t> key = counts;
    key.push_back(static_cast<std::int32_t>(pos));
    return memo_.at(key).bin_type;
  }

  std::size_t states() const { return memo_.size(); }
  const std::vector<std::size_t>& items() const { return items_; }

 private:
  const DpConfig& cfg_;
  std::vector<std::size_t> items_;
  std::int32_t top_;
  std::unordered_map<std::vector<std::int32_t>, MemoEntry, KeyHash> memo_;
};

}  // namespace

DpConfig MakeDpConfig(const Instance& inst, const Rational& delta,
                      std::size_t state_budget) {
  CheckDelta(delta);
  DpConfig cfg;
  cfg.delta = delta;
  cfg.levels = static_cast<std::int32_t>(Ceil(Rational(1) / delta));
  cfg.state_budget = state_budget;
  cfg.item_types.reserve(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const Rational ratio = inst.item(i).value() / delta;
    if (ratio.denominator() != 1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "item " + std::to_string(i) + " size " +
                      ToString(inst.item(i).value()) + " is not a multiple of delta " +
                      ToString(delta));
    }
    cfg.item_types.push_back(static_cast<std::int32_t>(ratio.numerator()));
  }
  return cfg;
}

LevelState InitialState(const Instance& inst, const DpConfig& cfg) {
  LevelState state;
  state.counts.assign(static_cast<std::size_t>(cfg.levels) + 1, 0);
  for (std::int64_t b = 0; b < inst.bin_count(); ++b) {
    const Rational used(inst.grid() - inst.capacity(b), inst.grid());
    const auto level = static_cast<std::size_t>(Ceil(used / cfg.delta));
    ++state.counts[level];
  }
  return state;
}

std::vector<std::int32_t> Allow(const GridSize& item, const LevelState& state,
                                const DpConfig& cfg) {
  std::vector<std::int32_t> out;
  for (std::size_t j = 0; j < state.counts.size(); ++j) {
    if (state.counts[j] >= 1 &&
        item.value() + cfg.delta * static_cast<std::int64_t>(j) <= 1) {
      out.push_back(static_cast<std::int32_t>(j));
    }
  }
  return out;
}

std::optional<std::int32_t> StepCost(const GridSize& item, const LevelState& state,
                                     std::int32_t j, const DpConfig& cfg) {
  if (j < 0 || static_cast<std::size_t>(j) >= state.counts.size()) return std::nullopt;
  if (state.counts[static_cast<std::size_t>(j)] < 1 || item.value() + cfg.delta * j > 1) {
    return std::nullopt;
  }
  return j == 0 ? 1 : 0;
}

DpResult Assign(const LevelState& state, const DpConfig& cfg, const Instance& inst) {
  if (cfg.item_types.size() != inst.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "item types do not match the instance");
  }
  if (state.counts.size() != static_cast<std::size_t>(cfg.levels) + 1) {
    throw Error(ErrorKind::kDimensionMismatch, "state has the wrong number of levels");
  }
  std::vector<std::size_t> items;
  for (std::size_t i = state.next_item; i < inst.size(); ++i) {
    if (cfg.item_types[i] > 0) items.push_back(i);
  }
  LevelDp dp(cfg, items);
  std::vector<std::int32_t> counts = state.counts;
  const std::int32_t best = dp.Solve(counts, 0);
  if (best >= kUnreachable) {
    throw Error(ErrorKind::kStuck,
                "items cannot be placed into the " + std::to_string(inst.bin_count()) +
                    " available bins");
  }

  // Replay: the lowest-index bin of the chosen level takes the item.
  DpResult result;
  result.regular_bins_opened = best;
  result.state_count = dp.states();
  std::vector<std::set<std::int64_t>> at_level(counts.size());
  if (state == InitialState(inst, cfg)) {
    for (std::int64_t b = 0; b < inst.bin_count(); ++b) {
      const Rational used(inst.grid() - inst.capacity(b), inst.grid());
      at_level[static_cast<std::size_t>(Ceil(used / cfg.delta))].insert(b);
    }
  } else {
    // Arbitrary start: number the bins level by level.
    std::int64_t b = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      for (std::int32_t r = 0; r < counts[j]; ++r) at_level[j].insert(b++);
    }
  }
  std::vector<std::int64_t> assignment(inst.size(), kNoBin);
  for (std::size_t pos = 0; pos < items.size(); ++pos) {
    const std::int32_t j = dp.BestType(counts, pos);
    const std::size_t item = items[pos];
    const std::int32_t type = cfg.item_types[item];
    auto& from = at_level[static_cast<std::size_t>(j)];
    const std::int64_t bin = *from.begin();
    from.erase(from.begin());
    at_level[static_cast<std::size_t>(j + type)].insert(bin);
    --counts[static_cast<std::size_t>(j)];
    ++counts[static_cast<std::size_t>(j + type)];
    assignment[item] = bin;
    result.trace.push_back(DpStep{item, j});
  }
  result.packing.assignment = std::move(assignment);
  result.packing.bins_opened = best;
  return result;
}

DpResult SolveOnGrid(const Instance& inst, const Rational& delta,
                     std::size_t state_budget) {
  const DpConfig cfg = MakeDpConfig(inst, delta, state_budget);
  return Assign(InitialState(inst, cfg), cfg, inst);
}

DpResult SolveRounded(const Instance& inst, const Rational& eps, std::int64_t c,
                      std::size_t state_budget) {
  if (eps <= 0 || eps >= 1) {
    throw Error(ErrorKind::kInvalidArgument, "eps must lie in (0, 1), got " + ToString(eps));
  }
  if (c <= 1) {
    throw Error(ErrorKind::kInvalidArgument, "c must be an integer > 1, got " + std::to_string(c));
  }
  const Rational delta = eps / c;
  const std::int32_t top = TopLevel(delta);
  DpConfig cfg;
  cfg.delta = delta;
  cfg.levels = static_cast<std::int32_t>(Ceil(Rational(1) / delta));
  cfg.state_budget = state_budget;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const Rational s = inst.item(i).value();
    if (s < eps) {
      throw Error(ErrorKind::kItemBelowEpsilon,
                  "item " + std::to_string(i) + " size " + ToString(s) + " < eps " +
                      ToString(eps));
    }
    const auto type = static_cast<std::int32_t>(Ceil(s / delta));
    if (type > top) {
      throw Error(ErrorKind::kInvalidArgument,
                  "item " + std::to_string(i) + " rounds above the bin capacity; pick eps/c dividing 1");
    }
    cfg.item_types.push_back(type);
  }
  return Assign(InitialState(inst, cfg), cfg, inst);
}

std::optional<std::uint64_t> StateCountBound(std::uint64_t m, const Rational& delta,
                                             std::uint64_t n) {
  CheckDelta(delta);
  const auto levels = static_cast<std::uint64_t>(Ceil(Rational(1) / delta));
  const std::uint64_t top = m + levels - 1;
  const std::uint64_t choose = levels - 1;
  constexpr auto kMax = static_cast<unsigned __int128>(std::numeric_limits<std::uint64_t>::max());
  unsigned __int128 binom = 1;
  for (std::uint64_t i = 1; i <= choose; ++i) {
    binom = binom * (top - choose + i) / i;
    if (binom > kMax) return std::nullopt;
  }
  const unsigned __int128 total = binom * n;
  if (total > kMax) return std::nullopt;
  return static_cast<std::uint64_t>(total);
}

std::string SerializeDpResult(const DpResult& result) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& step : result.trace) {
    trace.push_back({{"item", step.item}, {"bin_type", step.bin_type}});
  }
  return nlohmann::json{{"opened", result.regular_bins_opened},
                        {"trace", trace},
                        {"state_count", result.state_count}}
      .dump();
}

}  // namespace binlab
