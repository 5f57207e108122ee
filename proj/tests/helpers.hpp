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

#ifndef BINLAB_TESTS_HELPERS_HPP_
#define BINLAB_TESTS_HELPERS_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace binlab::testing {

inline std::vector<std::int64_t> Runs(
    std::initializer_list<std::pair<std::int64_t, std::int64_t>> runs) {
  std::vector<std::int64_t> out;
  for (auto [size, count] : runs) out.insert(out.end(), static_cast<std::size_t>(count), size);
  return out;
}

inline std::int64_t Draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline std::vector<std::int64_t> RandomSizes(std::mt19937_64& rng, std::int64_t n,
                                             std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < n; ++i) out.push_back(Draw(rng, lo, hi));
  return out;
}

}  // namespace binlab::testing

#endif  // BINLAB_TESTS_HELPERS_HPP_
