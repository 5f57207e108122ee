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

#ifndef BINLAB_HEURISTICS_HPP_
#define BINLAB_HEURISTICS_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "binlab/instance.hpp"

namespace binlab {

enum class FitRule { kNext, kFirst, kBest };

// Online packing of `sizes` in the given order into bins of `capacity`.
// Returns the bin index of each position; size-zero items get kNoBin.
// Best fit breaks ties on residual capacity by lowest bin index.
std::vector<std::int64_t> FitSequence(std::span<const std::int64_t> sizes,
                                      std::int64_t capacity, FitRule rule);

// The regular-instance heuristics. Each throws Error(kInvalidArgument) on an
// instance with irregular capacities.
Packing NextFit(const Instance& inst);
Packing FirstFit(const Instance& inst);
Packing BestFit(const Instance& inst);

// Stable sort by size descending, then the base rule (NFD / FFD / BFD).
Packing DecreasingVariant(const Instance& inst, FitRule base);

// Item order for the decreasing variants: indices by size descending,
// equal sizes keep input order.
std::vector<std::size_t> DecreasingOrder(std::span<const std::int64_t> sizes);

}  // namespace binlab

#endif  // BINLAB_HEURISTICS_HPP_
