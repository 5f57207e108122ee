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

#include "binlab/verify/oracles.hpp"

#include <algorithm>
#include <limits>

namespace binlab::verify {

std::int64_t ExhaustivePartitionOpt(std::span<const std::int64_t> sizes,
                                    std::int64_t capacity) {
  std::vector<std::int64_t> items;
  for (std::int64_t s : sizes) {
    if (s > 0) items.push_back(s);
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> blocks;
  // Restricted growth strings: item i joins an existing block or starts the
  // next one.
  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (static_cast<std::int64_t>(blocks.size()) >= best) return;
    if (i == items.size()) {
      best = std::min(best, static_cast<std::int64_t>(blocks.size()));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b] + items[i] > capacity) continue;
      blocks[b] += items[i];
      self(self, i + 1);
      blocks[b] -= items[i];
    }
    blocks.push_back(items[i]);
    self(self, i + 1);
    blocks.pop_back();
  };
  visit(visit, 0);
  return items.empty() ? 0 : best;
}

std::optional<std::int64_t> ExhaustiveMinCover(
    std::span<const std::int64_t> demand,
    const std::vector<std::vector<std::int64_t>>& configs, std::int64_t max_size) {
  const std::size_t k = demand.size();
  std::vector<std::int64_t> sum(k, 0);
  auto covers = [&] {
    for (std::size_t i = 0; i < k; ++i) {
      if (sum[i] < demand[i]) return false;
    }
    return true;
  };
  // Multisets of exactly `left` more configurations with index >= from.
  auto any = [&](auto&& self, std::size_t from, std::int64_t left) -> bool {
    if (left == 0) return covers();
    for (std::size_t j = from; j < configs.size(); ++j) {
      for (std::size_t i = 0; i < k; ++i) sum[i] += configs[j][i];
      const bool found = self(self, j, left - 1);
      for (std::size_t i = 0; i < k; ++i) sum[i] -= configs[j][i];
      if (found) return true;
    }
    return false;
  };
  for (std::int64_t size = 0; size <= max_size; ++size) {
    if (any(any, 0, size)) return size;
  }
  return std::nullopt;
}

}  // namespace binlab::verify
