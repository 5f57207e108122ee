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

#ifndef BINLAB_EXACT_HPP_
#define BINLAB_EXACT_HPP_

#include <cstdint>

#include "binlab/instance.hpp"

namespace binlab {

struct ExactResult {
  std::int64_t lower = 0;  // equals upper when optimal
  std::int64_t upper = 0;  // bins of `packing`
  bool optimal = false;
  std::int64_t nodes = 0;
  Packing packing;
};

// ceil(sum of sizes), exact.
std::int64_t LowerBoundVolume(const Instance& inst);

// Minimum number of unit bins. Branch-and-bound over placements in
// decreasing size order; an item tries each distinct bin load once and at
// most one empty bin. When node_budget runs out, returns the interval
// [volume bound, incumbent] with optimal == false.
ExactResult ExactOpt(const Instance& inst, std::int64_t node_budget);

}  // namespace binlab

#endif  // BINLAB_EXACT_HPP_
