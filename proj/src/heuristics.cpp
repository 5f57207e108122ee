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

#include <algorithm>
#include <numeric>

#include "binlab/error.hpp"

namespace binlab {
namespace {

void RequireRegular(const Instance& inst, const char* who) {
  if (!inst.is_regular()) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(who) + " needs a regular instance (all capacities 1)");
  }
}

Packing PackInOrder(const Instance& inst, std::span<const std::size_t> order,
                    FitRule rule) {
  std::vector<std::int64_t> sizes;
  sizes.reserve(order.size());
  for (std::size_t i : order) sizes.push_back(inst.sizes()[i]);
  const auto bins = FitSequence(sizes, inst.grid(), rule);
  std::vector<std::int64_t> assignment(inst.size(), kNoBin);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    assignment[order[pos]] = bins[pos];
  }
  return MakePacking(inst, std::move(assignment));
}

std::vector<std::size_t> Identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

}  // namespace

std::vector<std::int64_t> FitSequence(std::span<const std::int64_t> sizes,
                                      std::int64_t capacity, FitRule rule) {
  std::vector<std::int64_t> out(sizes.size(), kNoBin);
  std::vector<std::int64_t> residual;
  for (std::size_t pos = 0; pos < sizes.size(); ++pos) {
    const std::int64_t s = sizes[pos];
    if (s == 0) continue;
    std::int64_t chosen = -1;
    switch (rule) {
      case FitRule::kNext:
        if (!residual.empty() && residual.back() >= s) {
          chosen = static_cast<std::int64_t>(residual.size()) - 1;
        }
        break;
      case FitRule::kFirst:
        for (std::size_t b = 0; b < residual.size(); ++b) {
          if (residual[b] >= s) {
            chosen = static_cast<std::int64_t>(b);
            break;
          }
        }
        break;
      case FitRule::kBest: {
        std::int64_t best_left = capacity + 1;
        for (std::size_t b = 0; b < residual.size(); ++b) {
          if (residual[b] >= s && residual[b] - s < best_left) {
            best_left = residual[b] - s;
            chosen = static_cast<std::int64_t>(b);
          }
        }
        break;
      }
    }
    if (chosen < 0) {
      residual.push_back(capacity);
      chosen = static_cast<std::int64_t>(residual.size()) - 1;
    }
    residual[static_cast<std::size_t>(chosen)] -= s;
    out[pos] = chosen;
  }
  return out;
}

Packing NextFit(const Instance& inst) {
  RequireRegular(inst, "next fit");
  return PackInOrder(inst, Identity(inst.size()), FitRule::kNext);
}

Packing FirstFit(const Instance& inst) {
  RequireRegular(inst, "first fit");
  return PackInOrder(inst, Identity(inst.size()), FitRule::kFirst);
}

Packing BestFit(const Instance& inst) {
  RequireRegular(inst, "best fit");
  return PackInOrder(inst, Identity(inst.size()), FitRule::kBest);
}

std::vector<std::size_t> DecreasingOrder(std::span<const std::int64_t> sizes) {
  auto order = Identity(sizes.size());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sizes[a] > sizes[b];
  });
  return order;
}

Packing DecreasingVariant(const Instance& inst, FitRule base) {
  RequireRegular(inst, "decreasing variant");
  return PackInOrder(inst, DecreasingOrder(inst.sizes()), base);
}

}  // namespace binlab
