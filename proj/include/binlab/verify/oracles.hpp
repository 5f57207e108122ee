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

#ifndef BINLAB_VERIFY_ORACLES_HPP_
#define BINLAB_VERIFY_ORACLES_HPP_

// Brute-force reference solvers. They share no code with the solvers they
// check and are only meant for tiny inputs.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace binlab::verify {

// Minimum bins over every set partition of the items whose blocks fit in
// `capacity`. Size-zero items are ignored. Intended for n <= 10.
std::int64_t ExhaustivePartitionOpt(std::span<const std::int64_t> sizes,
                                    std::int64_t capacity);

// Smallest multiset of configurations (count vectors) whose summed counts
// reach `demand`, searched by increasing multiset size up to max_size.
// nullopt if no multiset of at most max_size configurations covers.
std::optional<std::int64_t> ExhaustiveMinCover(
    std::span<const std::int64_t> demand,
    const std::vector<std::vector<std::int64_t>>& configs, std::int64_t max_size);

}  // namespace binlab::verify

#endif  // BINLAB_VERIFY_ORACLES_HPP_
